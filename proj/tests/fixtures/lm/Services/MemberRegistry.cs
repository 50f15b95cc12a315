using System.Collections.Generic;
using LibraryManager.Models;

namespace LibraryManager.Services
{
    public class MemberRegistry
    {
        private readonly Dictionary<int, Member> members = new Dictionary<int, Member>();
        private int nextId = 1;

        public Member Register(string name, bool staff)
        {
            var member = new Member(nextId++, name);
            member.IsStaff = staff;
            members[member.Id] = member;
            return member;
        }

        public Member Lookup(int id)
        {
            Member found;
            return members.TryGetValue(id, out found) ? found : null;
        }

        public IEnumerable<Member> All()
        {
            return members.Values;
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
            return acc;
        }
    }
}
