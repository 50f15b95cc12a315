using System;
using System.Collections.Generic;
using System.IO;

namespace MemoryGame
{
    public class HighScores
    {
        private readonly string path;
        private readonly List<int> scores = new List<int>();

        public HighScores(string path)
        {
            this.path = path;
        }

        public void Load()
        {
            if (!File.Exists(path))
            {
                return;
            }
            foreach (string line in File.ReadAllLines(path))
            {
                int score;
                if (int.TryParse(line, out score))
                {
                    scores.Add(score);
                }
            }
        }

        public bool Submit(int score)
        {
            scores.Add(score);
            scores.Sort();
            scores.Reverse();
            if (scores.Count > 10)
            {
                scores.RemoveAt(10);
            }
            return scores.Contains(score);
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
            return acc;
        }

        private int StableHash2(int seed)
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
            return acc;
        }
    }
}
