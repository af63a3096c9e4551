"""Path algebra quotients: preset shapes, frozen dimensions, reduction oracle."""

import pytest

from ortk.quiver import (
    BasisNotStabilized,
    PathClass,
    Quiver,
    build_quiver,
    hom_dimensions,
    path_normal_forms,
    render_path,
    word_normal_form,
)


def _words_dfs(q, s, t, length):
    """All composable arrow words from s to t, found by plain depth-first search."""
    amap = {name: (src, tgt) for name, src, tgt in q.arrows}
    names = sorted(amap)
    found = []

    def go(cur, at):
        if len(cur) == length:
            if at == t:
                found.append(tuple(cur))
            return
        for nm in names:
            src, tgt = amap[nm]
            if src == at:
                cur.append(nm)
                go(cur, tgt)
                cur.pop()

    go([], s)
    return found


def _bareiss_rank(rows):
    """Rank of an integer matrix by fraction-free elimination."""
    if not rows:
        return 0
    mat = [list(r) for r in rows]
    m, n = len(mat), len(mat[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(n):
        piv = None
        for i in range(row, m):
            if mat[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        for i in range(row + 1, m):
            for j in range(col + 1, n):
                mat[i][j] = (mat[row][col] * mat[i][j] - mat[i][col] * mat[row][j]) // prev
            mat[i][col] = 0
        prev = mat[row][col]
        rank += 1
        row += 1
        if row == m:
            break
    return rank


def _oracle_degree_dim(q, s, t, length):
    """Dimension of one degree of e_s A e_t, via integer elimination.

    Column order is ascending and killed words skip their commutation
    translates, so this walks a different route than the package code.
    """
    words = _words_dfs(q, s, t, length)
    if not words:
        return 0
    cols = {wd: k for k, wd in enumerate(words)}
    rows = []
    for wd in words:
        killed = False
        for z in q.zero_relations:
            k = len(z)
            if k <= length and any(wd[i:i + k] == z for i in range(length - k + 1)):
                killed = True
                break
        if killed:
            row = [0] * len(words)
            row[cols[wd]] = 1
            rows.append(row)
            continue
        for lhs, rhs in q.commutation_relations:
            k = len(lhs)
            for i in range(length - k + 1):
                for one, other in ((lhs, rhs), (rhs, lhs)):
                    if wd[i:i + k] == one:
                        swapped = wd[:i] + other + wd[i + k:]
                        if swapped != wd:
                            row = [0] * len(words)
                            row[cols[wd]] += 1
                            row[cols[swapped]] -= 1
                            rows.append(row)
    return len(words) - _bareiss_rank(rows)


def _oracle_dim(q, s, t, max_len):
    return sum(_oracle_degree_dim(q, s, t, length) for length in range(max_len + 1))


def test_preset_shapes():
    q = build_quiver("preprojective_a2")
    assert len(q.vertices) == 2
    assert len(q.arrows) == 2
    assert len(q.zero_relations) == 2
    assert not q.commutation_relations

    q = build_quiver("chain3")
    assert q.vertices == [1, 2, 3]
    assert len(q.arrows) == 4
    assert len(q.zero_relations) == 4

    q = build_quiver("square4")
    assert len(q.vertices) == 4
    assert len(q.arrows) == 8
    assert len(q.zero_relations) == 16
    assert len(q.commutation_relations) == 4

    q = build_quiver("zigzag_window", 2)
    assert q.vertices == [-2, -1, 0, 1, 2]
    assert len(q.arrows) == 8
    assert len(q.zero_relations) == 6
    assert len(q.commutation_relations) == 3

    q = build_quiver("zigzag_window(3)")
    assert len(q.vertices) == 7
    assert len(q.arrows) == 12
    assert len(q.zero_relations) == 10
    assert len(q.commutation_relations) == 5


def test_build_quiver_rejects_bad_presets():
    with pytest.raises(ValueError):
        build_quiver("zigzag_window", 1)
    with pytest.raises(ValueError):
        build_quiver("zigzag_window")
    with pytest.raises(ValueError):
        build_quiver("zigzag_window(x)")
    with pytest.raises(ValueError):
        build_quiver("pentagon")


def test_quiver_validation():
    with pytest.raises(ValueError):
        Quiver(
            vertices=[1, 2],
            arrows=[("a", 1, 2), ("b", 2, 1)],
            zero_relations=frozenset({("a", "a")}),
            commutation_relations=frozenset(),
        )
    with pytest.raises(ValueError):
        Quiver(
            vertices=[1, 2],
            arrows=[("a", 1, 2), ("b", 2, 1)],
            zero_relations=frozenset(),
            commutation_relations=frozenset({(("a",), ("b",))}),
        )
    with pytest.raises(ValueError):
        Quiver(
            vertices=[1, 2],
            arrows=[("a", 1, 2), ("b", 2, 1)],
            zero_relations=frozenset(),
            commutation_relations=frozenset({(("a", "b"), ("a", "b", "a", "b"))}),
        )
    with pytest.raises(ValueError):
        Quiver(
            vertices=[1, 2],
            arrows=[("a", 1, 2), ("a", 2, 1)],
            zero_relations=frozenset(),
            commutation_relations=frozenset(),
        )


def test_preprojective_normal_forms():
    q = build_quiver("preprojective_a2")
    nf = path_normal_forms(q, 2)
    assert [pc.word for pc in nf[(1, 1)]] == [()]
    assert [pc.word for pc in nf[(1, 2)]] == [("a",)]
    assert [pc.word for pc in nf[(2, 1)]] == [("b",)]
    assert [pc.word for pc in nf[(2, 2)]] == [()]
    assert sum(len(v) for v in nf.values()) == 4
    assert hom_dimensions(q) == [[1, 1], [1, 1]]


def test_chain3_dimensions():
    # the four listed relations kill only the back-and-forth pairs, so the
    # straight-through words a*c and d*b survive: every pair has dimension 1
    q = build_quiver("chain3")
    assert hom_dimensions(q) == [[1, 1, 1], [1, 1, 1], [1, 1, 1]]
    nf = path_normal_forms(q, 3)
    assert [pc.word for pc in nf[(1, 3)]] == [("a", "c")]
    assert [pc.word for pc in nf[(3, 1)]] == [("d", "b")]
    assert sum(len(v) for v in nf.values()) == 9


def test_square4_dimensions():
    q = build_quiver("square4")
    assert hom_dimensions(q) == [[1] * 4 for _ in range(4)]
    nf = path_normal_forms(q, 3)
    assert sum(len(v) for v in nf.values()) == 16
    assert [pc.word for pc in nf[(2, 4)]] == [("a", "f")]
    assert [pc.word for pc in nf[(4, 2)]] == [("e", "b")]
    assert [pc.word for pc in nf[(1, 3)]] == [("b", "c")]
    assert [pc.word for pc in nf[(3, 1)]] == [("d", "a")]
    for (s, t), classes in nf.items():
        for pc in classes:
            assert pc.source == s and pc.target == t


def test_zigzag_interior_dimensions():
    q = build_quiver("zigzag_window(3)")
    dims = hom_dimensions(q)
    idx = {v: k for k, v in enumerate(q.vertices)}
    for i in (-1, 0, 1):
        for j in (-1, 0, 1):
            if i == j:
                want = 2
            elif abs(i - j) == 1:
                want = 1
            else:
                want = 0
            assert dims[idx[i]][idx[j]] == want


def test_zigzag_loop_class():
    q = build_quiver("zigzag_window", 2)
    nf = path_normal_forms(q, 3)
    assert [pc.word for pc in nf[(0, 0)]] == [(), ("a1", "b1")]
    # boundary loops have no partner word to merge with but still survive
    assert [pc.word for pc in nf[(-2, -2)]] == [(), ("a-1", "b-1")]
    assert len(nf[(2, 2)]) == 2


def test_window_stability():
    inner = build_quiver("zigzag_window", 3)
    outer = build_quiver("zigzag_window", 4)
    din = hom_dimensions(inner)
    dout = hom_dimensions(outer)
    iin = {v: k for k, v in enumerate(inner.vertices)}
    iout = {v: k for k, v in enumerate(outer.vertices)}
    for i in (-1, 0, 1):
        for j in (-1, 0, 1):
            assert din[iin[i]][iin[j]] == dout[iout[i]][iout[j]]


def test_dimension_symmetry():
    for preset in ("preprojective_a2", "chain3", "square4", "zigzag_window(2)", "zigzag_window(3)"):
        dims = hom_dimensions(build_quiver(preset))
        n = len(dims)
        for i in range(n):
            for j in range(n):
                assert dims[i][j] == dims[j][i]


def test_rewriting_soundness():
    for preset in ("preprojective_a2", "chain3", "square4", "zigzag_window(3)"):
        q = build_quiver(preset)
        for z in q.zero_relations:
            assert word_normal_form(q, z) == {}
        for lhs, rhs in q.commutation_relations:
            assert word_normal_form(q, lhs) == word_normal_form(q, rhs)
    # the commuting squares carry actual nonzero classes
    q = build_quiver("square4")
    assert word_normal_form(q, ("c", "h")) == {("a", "f"): 1}
    q = build_quiver("zigzag_window", 3)
    assert word_normal_form(q, ("b0", "a0")) == {("a1", "b1"): 1}


def test_basis_words_are_fixed_points():
    for preset in ("preprojective_a2", "chain3", "square4", "zigzag_window(2)"):
        q = build_quiver(preset)
        nf = path_normal_forms(q, 3)
        for classes in nf.values():
            for pc in classes:
                if pc.word:
                    assert word_normal_form(q, pc.word) == {pc.word: 1}


def test_not_stabilized():
    q = build_quiver("chain3")
    with pytest.raises(BasisNotStabilized):
        path_normal_forms(q, 1)
    with pytest.raises(BasisNotStabilized):
        hom_dimensions(q, max_len=1)
    path_normal_forms(q, 2)
    with pytest.raises(BasisNotStabilized):
        path_normal_forms(build_quiver("preprojective_a2"), 0)
    with pytest.raises(ValueError):
        path_normal_forms(q, -1)


def test_word_normal_form_cases():
    q = build_quiver("preprojective_a2")
    assert word_normal_form(q, ("a", "b")) == {}
    assert word_normal_form(q, ("a",)) == {("a",): 1}
    with pytest.raises(ValueError):
        word_normal_form(q, ())
    q = build_quiver("chain3")
    assert word_normal_form(q, ("a", "c")) == {("a", "c"): 1}
    assert word_normal_form(q, ("a", "b", "a")) == {}


def test_render_path():
    assert render_path(PathClass((), 0, 0)) == "e_0"
    assert render_path(PathClass(("a1", "b1"), 0, 0)) == "a1*b1"


def test_oracle_agreement():
    cases = [
        ("preprojective_a2", 2),
        ("chain3", 3),
        ("square4", 3),
        ("zigzag_window(2)", 3),
        ("zigzag_window(3)", 3),
    ]
    for preset, max_len in cases:
        q = build_quiver(preset)
        nf = path_normal_forms(q, max_len)
        for s in q.vertices:
            for t in q.vertices:
                assert len(nf[(s, t)]) == _oracle_dim(q, s, t, max_len), (preset, s, t)
                assert _oracle_degree_dim(q, s, t, max_len + 1) == 0, (preset, s, t)
