using System;

namespace MemoryGame.Game
{
    public class [[c:ScoreKeeper|ScoreKeeper]]
    {
        public const int [[f:ScoreKeeper.PairPoints|PairPoints]] = 10;
        private int [[f:ScoreKeeper.streak|streak]];

        public int [[m:ScoreKeeper.Score|Score]]([[r:Player|Player]] [[v:ScoreKeeper.Score.player|player]])
        {
            return [[r:ScoreKeeper.Score.player|player]].Pairs * [[r:ScoreKeeper.PairPoints|PairPoints]];
        }

        public int [[m:ScoreKeeper.OnPair|OnPair]]([[r:Player|Player]] [[v:ScoreKeeper.OnPair.player|player]])
        {
            [[r:ScoreKeeper.streak|streak]]++;
            [[r:ScoreKeeper.OnPair.player|player]].RecordPair();
            int [[v:ScoreKeeper.OnPair.bonus|bonus]] = Math.Max(0, [[r:ScoreKeeper.streak|streak]] - 1) * 5;
            return [[r:ScoreKeeper.PairPoints|PairPoints]] + [[r:ScoreKeeper.OnPair.bonus|bonus]];
        }

        public void [[m:ScoreKeeper.OnMiss|OnMiss]]([[r:Player|Player]] [[v:ScoreKeeper.OnMiss.player|player]])
        {
            [[r:ScoreKeeper.streak|streak]] = 0;
            [[r:ScoreKeeper.OnMiss.player|player]].RecordMiss();
        }
@@FILL@@
    }
}
