using System;

namespace LibraryManager.UI
{
    public class [[c:ConsoleIO|ConsoleIO]]
    {
        public string [[m:ConsoleIO.Prompt|Prompt]](string [[v:ConsoleIO.Prompt.label|label]])
        {
            Console.Write([[r:ConsoleIO.Prompt.label|label]] + ": ");
            return Console.ReadLine() ?? string.Empty;
        }

        public int [[m:ConsoleIO.PromptNumber|PromptNumber]](string [[v:ConsoleIO.PromptNumber.label|label]])
        {
            while (true)
            {
                string [[v:ConsoleIO.PromptNumber.text|text]] = [[r:ConsoleIO.Prompt|Prompt]]([[r:ConsoleIO.PromptNumber.label|label]]);
                int [[v:ConsoleIO.PromptNumber.value|number]];
                if (int.TryParse([[r:ConsoleIO.PromptNumber.text|text]], out [[r:ConsoleIO.PromptNumber.value|number]]))
                {
                    return [[r:ConsoleIO.PromptNumber.value|number]];
                }
                [[r:ConsoleIO.Error|Error]]("Please enter a number.");
            }
        }

        public void [[m:ConsoleIO.Error|Error]](string [[v:ConsoleIO.Error.message|message]])
        {
            var [[v:ConsoleIO.Error.previous|previous]] = Console.ForegroundColor;
            Console.ForegroundColor = ConsoleColor.Red;
            Console.WriteLine([[r:ConsoleIO.Error.message|message]]);
            Console.ForegroundColor = [[r:ConsoleIO.Error.previous|previous]];
        }
@@FILL@@
    }
}
