using System;
using MemoryGame.Cards;

namespace MemoryGame.Rendering
{
    // Draws every card face as nine rows of console text.
    public class [[c:CardRenderer|CardRenderer]]
    {
        private readonly [[r:ConsoleCanvas|ConsoleCanvas]] [[f:CardRenderer.canvas|canvas]];

        public [[m:CardRenderer.ctor|CardRenderer]]([[r:ConsoleCanvas|ConsoleCanvas]] [[v:CardRenderer.ctor.canvas|canvas]])
        {
            this.[[r:CardRenderer.canvas|canvas]] = [[r:CardRenderer.ctor.canvas|canvas]];
        }

        public void [[m:CardRenderer.Draw|Draw]]([[r:Card|Card]] [[v:CardRenderer.Draw.card|card]], int [[v:CardRenderer.Draw.left|left]], int [[v:CardRenderer.Draw.top|top]])
        {
            if (![[r:CardRenderer.Draw.card|card]].FaceUp)
            {
                [[r:CardRenderer.DrawBack|DrawBack]]([[r:CardRenderer.Draw.left|left]], [[r:CardRenderer.Draw.top|top]]);
                return;
            }
            switch ([[r:CardRenderer.Draw.card|card]].Label())
            {
@@GEN:dispatch@@
                default:
                    [[r:CardRenderer.DrawBack|DrawBack]]([[r:CardRenderer.Draw.left|left]], [[r:CardRenderer.Draw.top|top]]);
                    break;
            }
        }

        private void [[m:CardRenderer.DrawBack|DrawBack]](int [[v:CardRenderer.DrawBack.left|left]], int [[v:CardRenderer.DrawBack.top|top]])
        {
            [[r:CardRenderer.canvas|canvas]].PutColored([[r:CardRenderer.DrawBack.left|left]], [[r:CardRenderer.DrawBack.top|top]], "+-----+", ConsoleColor.DarkCyan);
            [[r:CardRenderer.canvas|canvas]].PutColored([[r:CardRenderer.DrawBack.left|left]], [[r:CardRenderer.DrawBack.top|top]] + 1, "|/////|", ConsoleColor.DarkCyan);
            [[r:CardRenderer.canvas|canvas]].PutColored([[r:CardRenderer.DrawBack.left|left]], [[r:CardRenderer.DrawBack.top|top]] + 2, "|/////|", ConsoleColor.DarkCyan);
            [[r:CardRenderer.canvas|canvas]].PutColored([[r:CardRenderer.DrawBack.left|left]], [[r:CardRenderer.DrawBack.top|top]] + 3, "|/////|", ConsoleColor.DarkCyan);
            [[r:CardRenderer.canvas|canvas]].PutColored([[r:CardRenderer.DrawBack.left|left]], [[r:CardRenderer.DrawBack.top|top]] + 4, "+-----+", ConsoleColor.DarkCyan);
        }
@@GEN:faces@@
@@FILL@@
    }
}
