using System;
using System.Collections.Generic;

namespace LibraryManager.Models
{
    public class [[c:Member|Member]]
    {
        public const int [[f:Member.MaxLoans|MaxLoans]] = 5;

        public int [[p:Member.Id|Id]] { get; }
        public string [[p:Member.Name|Name]] { get; set; }
        public bool [[p:Member.IsStaff|IsStaff]] { get; set; }
        private readonly List<[[r:Loan|Loan]]> [[f:Member.loans|loans]] = new List<[[r:Loan|Loan]]>();

        public [[m:Member.ctor|Member]](int [[v:Member.ctor.id|id]], string [[v:Member.ctor.name|name]])
        {
            [[r:Member.Id|Id]] = [[r:Member.ctor.id|id]];
            [[r:Member.Name|Name]] = [[r:Member.ctor.name|name]];
        }

        public IReadOnlyList<[[r:Loan|Loan]]> [[p:Member.Loans|Loans]] => [[r:Member.loans|loans]];

        public bool [[m:Member.CanBorrow|CanBorrow]]()
        {
            int [[v:Member.CanBorrow.limit|limit]] = [[r:Member.IsStaff|IsStaff]] ? [[r:Member.MaxLoans|MaxLoans]] * 2 : [[r:Member.MaxLoans|MaxLoans]];
            return [[r:Member.loans|loans]].Count < [[r:Member.CanBorrow.limit|limit]];
        }

        public void [[m:Member.AddLoan|AddLoan]]([[r:Loan|Loan]] [[v:Member.AddLoan.loan|loan]])
        {
            [[r:Member.loans|loans]].Add([[r:Member.AddLoan.loan|loan]]);
        }

        public void [[m:Member.RemoveLoan|RemoveLoan]]([[r:Loan|Loan]] [[v:Member.RemoveLoan.loan|loan]])
        {
            [[r:Member.loans|loans]].Remove([[r:Member.RemoveLoan.loan|loan]]);
        }
@@FILL@@
    }
}
