"""Tour of the F^n primitives: vectors, distances, balls, codes."""

from idcodes import BitVector, Code, ball, ball_size, direct_sum, distance, sphere

# Vectors are integers tagged with a dimension.  Coordinate 1 is the most
# significant bit, so the printed form reads left to right.
v = BitVector(385, 9)
print("vector:", v, "  decimal:", v.word, "  weight:", v.weight)

w = BitVector(0b110000000, 9)
print("distance to", w, "is", distance(v, w))

# Balls and spheres around a center, with the closed-form count alongside.
center = BitVector(0, 5)
print("\n|B(x, 2)| in F^5 =", ball_size(5, 2))
print("enumerated:", len(ball(center, 2)))
print("sphere at distance 2:", sorted(u.word for u in sphere(center, 2)))

# Codes are sorted duplicate-free word tuples.
code = Code.from_words([6, 3, 17, 3], 5)
print("\ncode words:", code.words, " size:", len(code))
print("contains 17?", 17 in code)

# The direct sum concatenates coordinates; sizes multiply.
left = Code.from_words([0, 3], 2)
right = Code.from_words([0, 1], 1)
total = direct_sum(left, right)
print("\ndirect sum of", left.words, "and", right.words, "->", total.words)
print("dimension:", total.dim)
