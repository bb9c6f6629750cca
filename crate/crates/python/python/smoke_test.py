"""Quick check that the extension module loads and agrees with known values."""

import permlab_py as pl

pi = pl.Permutation("241635")
assert str(pi) == "241635" and len(pi) == 6
assert pi.inverse().compose(pi) == pl.Permutation.identity(6)
assert pl.Permutation([3, 1, 2]).order() == 3

p, q = pl.rsk(pi)
assert p == [[1, 3, 5], [2, 4, 6]]
assert q == [[1, 2, 4], [3, 5, 6]]
assert pl.inverse_rsk(p, q) == pi

pat = pl.Pattern("231")
assert pat.matches(pl.Permutation("2413"))
assert pat.avoids(pl.Permutation("1234"))
assert len(pl.class_avoiders(pat, "knuth", 6)) == 32

derangement = pl.Pattern("1;x=0;y=0")
counts = [len(pl.class_avoiders(derangement, "conjugacy", n)) for n in range(1, 7)]
assert counts == [0, 1, 2, 9, 44, 265], counts

assert pl.class_census("toric", 5) == {1: 2, 2: 2, 3: 2, 6: 18}
assert len(pl.class_of("toric", pi)) in (1, 7)

stable, upto, witness = pl.is_stable(pl.Pattern("123;x=1,2"), "knuth", 6)
assert not stable and witness == (4, pl.Permutation("1324"))

assert pl.sigma(6) == 12
assert pl.robin_check(5040)[2] == "violated"
assert all(a == e for _, e, a in pl.sequence_check("A000085") if a is not None)

try:
    pl.class_census("knuth", 20)
except pl.BudgetExceeded:
    pass
else:
    raise AssertionError("budget not enforced")

try:
    pl.Pattern("12;q")
except ValueError:
    pass
else:
    raise AssertionError("bad pattern accepted")

print("smoke test passed")
