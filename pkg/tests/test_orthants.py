from itertools import product

from hypothesis import given, settings, strategies as st

from arfs2.orthants import Frame, OrthantSet

FRAMES = [((5, 0), (0, 5)), ((2, 1), (1, 3)), ((3, 0), (1, 2)), ((4,),)]
vec = st.tuples(st.integers(0, 9), st.integers(0, 9))


def brute(frame: Frame, corners, side=30):
    out = set()
    for c in corners:
        for steps in product(range(side), repeat=frame.dim):
            v = frame.from_coords(c, steps)
            if max(v) < side:
                out.add(v)
    return out


def box(side=30, d=2):
    return list(product(range(side), repeat=d))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(FRAMES[:3]), st.lists(vec, min_size=1, max_size=3),
       st.lists(vec, min_size=1, max_size=3))
def test_set_operations_match_enumeration(basis, xs, ys):
    F = Frame(basis)
    X, Y = OrthantSet(F, xs), OrthantSet(F, ys)
    bx, by = brute(F, xs), brute(F, ys)
    meet = X.intersection(Y)
    join = X.union(Y)
    for v in box():
        assert (v in X) == (v in bx)
        assert (v in meet) == (v in bx and v in by)
        assert (v in join) == (v in bx or v in by)
    assert X.issubset(join) and meet.issubset(Y)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(FRAMES[:3]), st.lists(vec, min_size=1, max_size=3), vec)
def test_translate(basis, xs, t):
    F = Frame(basis)
    X = OrthantSet(F, xs)
    T = X.translate(t)
    for v in box(20):
        w = tuple(a - b for a, b in zip(v, t))
        assert (v in T) == (min(w) >= 0 and w in X)


def test_reduce_drops_covered_corners():
    F = Frame(((5, 0), (0, 5)))
    X = OrthantSet(F, [(1, 4), (6, 4), (1, 9), (2, 3)])
    assert sorted(X) == [(1, 4), (2, 3)]


def test_cofinite():
    F = Frame(((1, 0), (0, 1)))
    whole = OrthantSet(F, [(0, 0)])
    assert OrthantSet(F, [(1, 0), (0, 1)]).cofinite_in(whole)
    assert not OrthantSet(F, [(1, 0)]).cofinite_in(whole)


def test_dimension_one():
    F = Frame(((4,),))
    X = OrthantSet(F, [(0,), (7,)])
    assert (12,) in X and (15,) in X and (3,) not in X and (11,) in X
