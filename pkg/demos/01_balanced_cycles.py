"""
Balanced non-transitive dice of any size
========================================

Three dice where each one beats the next with the same probability, grown
one die at a time.
"""

from ntdice import base_triple, build_cycle_set, extend_cycle, is_balanced, victory_matrix

# The smallest 3-sided triple found by search. Each die beats the next
# 5 times out of 9, and C beats A just as often.
triple = base_triple(3)
print(triple)
print("victorious probability:", is_balanced(triple))
print(victory_matrix(triple))

# Add a die: copy C slightly lower, nudge its smallest face just above
# C's instead, then relabel by rank. The probability stays 5/9.
four = extend_cycle(triple)
print()
print(four)
print("victorious probability:", is_balanced(four))

# Repeat for any n; here six 5-sided dice.
six = build_cycle_set(6, 5)
print()
print(six)
print("victorious probability:", is_balanced(six))
print(victory_matrix(six))
