"""
Dice for a strong tournament, stage by stage
============================================

Five dice that obey every arc of a strong 5-vertex tournament: a Hamilton
cycle A->B->C->D->E->A plus five chords.
"""

from ntdice import Tournament, build_strong_tournament_dice, is_balanced, probability, victory_matrix
from ntdice.tournament import iter_chord_stages

cycle = [("A", "B"), ("B", "C"), ("C", "D"), ("D", "E"), ("E", "A")]
chords = [("A", "C"), ("B", "D"), ("B", "E"), ("C", "E"), ("A", "D")]
t = Tournament(tuple("ABCDE"), frozenset(cycle + chords))

# Start from five balanced 3-sided dice shifted up by n^2 - 3n = 10, then
# each chord hands two labels above everything and two below everything
# to its endpoints.
for state in iter_chord_stages(t, chords):
    if state.done:
        plan = state.done[-1]
        w, l = state[plan.winner], state[plan.loser]
        print(f"stage {plan.stage}: {plan.winner} > {plan.loser}  P = {probability(w, l)}")
    for die in state.dice:
        print("   ", die)

built = build_strong_tournament_dice(t, chords)
print()
print(built.report)
print("cycle probability:", is_balanced(built.dice))
print(victory_matrix(built.dice))
