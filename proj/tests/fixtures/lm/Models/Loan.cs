using System;

namespace LibraryManager.Models
{
    public class Loan
    {
        public LibraryItem Item { get; }
        public Member Borrower { get; }
        public DateTime Due { get; private set; }
        private int renewals;

        public Loan(LibraryItem item, Member borrower, DateTime start)
        {
            Item = item;
            Borrower = borrower;
            Due = start.AddDays(item.LoanDays());
        }

        public bool IsOverdue(DateTime today)
        {
            return today > Due;
        }

        public bool Renew()
        {
            if (renewals >= 2)
            {
                return false;
            }
            renewals++;
            Due = Due.AddDays(7);
            return true;
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
