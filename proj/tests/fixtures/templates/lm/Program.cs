using LibraryManager.Services;
using LibraryManager.UI;

namespace LibraryManager
{
    public static class [[c:Program|Program]]
    {
        public static void [[m:Program.Main|Main]](string[] [[v:Program.Main.args|args]])
        {
            var [[v:Program.Main.catalog|catalog]] = new [[r:Catalog|Catalog]]();
            var [[v:Program.Main.registry|registry]] = new [[r:MemberRegistry|MemberRegistry]]();
            var [[v:Program.Main.loans|loans]] = new [[r:LoanService|LoanService]]([[r:Program.Main.catalog|catalog]], new [[r:FineCalculator|FineCalculator]]());
            new [[r:Menu|Menu]]([[r:Program.Main.catalog|catalog]], [[r:Program.Main.registry|registry]], [[r:Program.Main.loans|loans]]).Run();
        }
@@FILL@@
    }
}
