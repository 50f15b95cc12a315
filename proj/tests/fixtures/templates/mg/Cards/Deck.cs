using System;
using System.Collections.Generic;

namespace MemoryGame.Cards
{
    public class [[c:Deck|Deck]]
    {
        private static readonly char[] [[f:Deck.Symbols|Symbols]] = { '*', '#', '@', '%', '&', '+', '=', '~' };
        private readonly List<[[r:Card|Card]]> [[f:Deck.cards|cards]] = new List<[[r:Card|Card]]>();
        private readonly Random [[f:Deck.random|random]];

        public [[m:Deck.ctor|Deck]](int [[v:Deck.ctor.seed|seed]])
        {
            [[r:Deck.random|random]] = new Random([[r:Deck.ctor.seed|seed]]);
        }

        public List<[[r:Card|Card]]> [[m:Deck.Deal|Deal]](int [[v:Deck.Deal.pairs|pairs]], bool [[v:Deck.Deal.shapes|shapes]])
        {
            [[r:Deck.cards|cards]].Clear();
            int [[v:Deck.Deal.id|id]] = 0;
            for (int [[v:Deck.Deal.p|p]] = 0; [[r:Deck.Deal.p|p]] < [[r:Deck.Deal.pairs|pairs]]; [[r:Deck.Deal.p|p]]++)
            {
                for (int [[v:Deck.Deal.copy|copy]] = 0; [[r:Deck.Deal.copy|copy]] < 2; [[r:Deck.Deal.copy|copy]]++)
                {
                    if ([[r:Deck.Deal.shapes|shapes]])
                    {
                        [[r:Deck.cards|cards]].Add(new [[r:ShapeCard|ShapeCard]]([[r:Deck.Deal.id|id]]++, [[r:Deck.Symbols|Symbols]][[[r:Deck.Deal.p|p]] % [[r:Deck.Symbols|Symbols]].Length]));
                    }
                    else
                    {
                        [[r:Deck.cards|cards]].Add(new [[r:NumberCard|NumberCard]]([[r:Deck.Deal.id|id]]++, [[r:Deck.Deal.p|p]] + 1));
                    }
                }
            }
            [[r:Deck.Shuffle|Shuffle]]();
            return new List<[[r:Card|Card]]>([[r:Deck.cards|cards]]);
        }

        private void [[m:Deck.Shuffle|Shuffle]]()
        {
            for (int [[v:Deck.Shuffle.i|i]] = [[r:Deck.cards|cards]].Count - 1; [[r:Deck.Shuffle.i|i]] > 0; [[r:Deck.Shuffle.i|i]]--)
            {
                int [[v:Deck.Shuffle.j|j]] = [[r:Deck.random|random]].Next([[r:Deck.Shuffle.i|i]] + 1);
                [[r:Card|Card]] [[v:Deck.Shuffle.tmp|tmp]] = [[r:Deck.cards|cards]][[[r:Deck.Shuffle.i|i]]];
                [[r:Deck.cards|cards]][[[r:Deck.Shuffle.i|i]]] = [[r:Deck.cards|cards]][[[r:Deck.Shuffle.j|j]]];
                [[r:Deck.cards|cards]][[[r:Deck.Shuffle.j|j]]] = [[r:Deck.Shuffle.tmp|tmp]];
            }
        }
@@FILL@@
    }
}
