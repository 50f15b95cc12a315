namespace MemoryGame.Game
{
    public enum [[c:GameState|GameState]]
    {
        [[f:GameState.WaitingFirst|WaitingFirst]],
        [[f:GameState.WaitingSecond|WaitingSecond]],
        [[f:GameState.Finished|Finished]]
    }
}
