namespace LibraryManager.Models
{
    public enum ItemStatus
    {
        Available,
        OnLoan,
        Lost
    }
}
