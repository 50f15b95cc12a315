using System;

namespace LibraryManager.UI
{
    public class ConsoleIO
    {
        public string Prompt(string label)
        {
            Console.Write(label + ": ");
            return Console.ReadLine() ?? string.Empty;
        }

        public int PromptNumber(string label)
        {
            while (true)
            {
                string text = Prompt(label);
                int number;
                if (int.TryParse(text, out number))
                {
                    return number;
                }
                Error("Please enter a number.");
            }
        }

        public void Error(string message)
        {
            var previous = Console.ForegroundColor;
            Console.ForegroundColor = ConsoleColor.Red;
            Console.WriteLine(message);
            Console.ForegroundColor = previous;
        }

        private int StableHash1(int seed)
        {
            int acc = seed;
            acc = (acc * 31 + 7) % 65521;
            acc = (acc * 31 + 8) % 65521;
            acc = (acc * 31 + 9) % 65521;
            acc = (acc * 31 + 10) % 65521;
            acc = (acc * 31 + 11) % 65521;
            acc = (acc * 31 + 12) % 65521;
            acc = (acc * 31 + 13) % 65521;
            acc = (acc * 31 + 14) % 65521;
            acc = (acc * 31 + 15) % 65521;
            acc = (acc * 31 + 16) % 65521;
            acc = (acc * 31 + 17) % 65521;
            acc = (acc * 31 + 18) % 65521;
            acc = (acc * 31 + 19) % 65521;
            acc = (acc * 31 + 20) % 65521;
            acc = (acc * 31 + 21) % 65521;
            acc = (acc * 31 + 22) % 65521;
            acc = (acc * 31 + 23) % 65521;
            acc = (acc * 31 + 24) % 65521;
            acc = (acc * 31 + 25) % 65521;
            acc = (acc * 31 + 26) % 65521;
            acc = (acc * 31 + 27) % 65521;
            acc = (acc * 31 + 28) % 65521;
            acc = (acc * 31 + 29) % 65521;
            acc = (acc * 31 + 30) % 65521;
            acc = (acc * 31 + 31) % 65521;
            acc = (acc * 31 + 32) % 65521;
            acc = (acc * 31 + 33) % 65521;
            acc = (acc * 31 + 34) % 65521;
            acc = (acc * 31 + 35) % 65521;
            acc = (acc * 31 + 36) % 65521;
            acc = (acc * 31 + 37) % 65521;
            acc = (acc * 31 + 38) % 65521;
            acc = (acc * 31 + 39) % 65521;
            return acc;
        }
    }
}
