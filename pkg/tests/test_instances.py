"""Instance file codec and random generation tests."""

import json

import pytest

from matroidfrag import (
    CapExceeded,
    Exhausted,
    GeneratedInstance,
    InstanceFile,
    InvalidArgs,
    InvalidField,
    MalformedJson,
    NFragileTask,
    PipelineTask,
    RelaxTask,
    ReprMatroid,
    SchemaViolation,
    XFragileTask,
    gen_random,
    is_N_fragile,
    is_X_fragile_matrix,
    parse_instance,
    serialize_instance,
)

MINIMAL = '{"field": {"p": 2, "tower": []}, "matrix": {"rows": ["a"], "cols": ["b"], "entries": [[1]]}}'


def with_task(task_json):
    return (
        '{"field": {"p": 2, "tower": []},'
        ' "matrix": {"rows": ["a"], "cols": ["b"], "entries": [[1]]},'
        f' "task": {task_json}}}'
    )


def test_minimal_instance():
    inst = parse_instance(MINIMAL)
    assert inst.matrix.rows == ("a",)
    assert inst.matrix.enc("a", "b") == 1
    assert inst.task is None
    assert inst.seed is None


def test_round_trip_is_identity_on_canonical_form():
    texts = [
        MINIMAL,
        with_task('{"kind": "xfragile", "x": ["a", "b"]}'),
        with_task('{"kind": "relax", "contract": [], "delete": []}'),
        '{"field": {"p": 3, "tower": [{"deg": 2, "modulus": [1, 0, 1]}]},'
        ' "matrix": {"rows": ["a"], "cols": ["b"], "entries": [[7]]}, "seed": 9}',
    ]
    for text in texts:
        first = serialize_instance(parse_instance(text))
        second = serialize_instance(parse_instance(json.dumps(first)))
        assert first == second


def test_tower_field_instance():
    inst = parse_instance(
        '{"field": {"p": 2, "tower": [{"deg": 2, "modulus": [1, 1, 1]}]},'
        ' "matrix": {"rows": ["a"], "cols": ["b"], "entries": [[2]]}}'
    )
    assert inst.matrix.field.order == 4
    assert serialize_instance(inst)["field"] == {
        "p": 2,
        "tower": [{"deg": 2, "modulus": [1, 1, 1]}],
    }


def test_task_payloads():
    nf = parse_instance(with_task(
        '{"kind": "nfragile", "minor": {"rows": ["a"], "cols": [], "entries": [[]]}}'
    )).task
    assert isinstance(nf, NFragileTask)
    assert nf.minor.ground == {"a"}
    xt = parse_instance(with_task('{"kind": "xfragile", "x": ["b"]}')).task
    assert isinstance(xt, XFragileTask)
    assert xt.x == frozenset({"b"})
    rt = parse_instance(with_task('{"kind": "relax", "contract": ["a"], "delete": []}')).task
    assert isinstance(rt, RelaxTask)
    assert rt.contract == frozenset({"a"})
    pt = parse_instance(with_task(
        '{"kind": "pipeline", "minor": {"rows": [], "cols": ["b"], "entries": []}}'
    )).task
    assert isinstance(pt, PipelineTask)
    assert pt.minor.ground == {"b"}


def test_malformed_json():
    with pytest.raises(MalformedJson) as e:
        parse_instance("{bad")
    assert "line 1" in str(e.value)


def test_schema_paths_in_messages():
    with pytest.raises(SchemaViolation, match=r"\$: expected object"):
        parse_instance("[1]")
    with pytest.raises(SchemaViolation, match=r"\$: missing key 'matrix'"):
        parse_instance('{"field": {"p": 2, "tower": []}}')
    with pytest.raises(SchemaViolation, match=r"\$\.matrix\.entries\[0\]\[0\]"):
        parse_instance(
            '{"field": {"p": 2, "tower": []},'
            ' "matrix": {"rows": ["a"], "cols": ["b"], "entries": [[true]]}}'
        )
    with pytest.raises(SchemaViolation, match=r"\$\.task\.kind"):
        parse_instance(with_task('{"kind": "bogus"}'))
    with pytest.raises(SchemaViolation, match=r"\$\.task\.x\[0\]"):
        parse_instance(with_task('{"kind": "xfragile", "x": ["q"]}'))
    with pytest.raises(SchemaViolation, match=r"\$\.seed"):
        parse_instance(MINIMAL[:-1] + ', "seed": "x"}')
    with pytest.raises(SchemaViolation, match=r"unexpected key 'extra'"):
        parse_instance(MINIMAL[:-1] + ', "extra": 1}')


def test_duplicate_labels_rejected():
    with pytest.raises(SchemaViolation, match=r"\$\.matrix"):
        parse_instance(
            '{"field": {"p": 2, "tower": []},'
            ' "matrix": {"rows": ["a"], "cols": ["a"], "entries": [[1]]}}'
        )


def test_encoding_out_of_range():
    with pytest.raises(SchemaViolation, match="out of range"):
        parse_instance(
            '{"field": {"p": 2, "tower": []},'
            ' "matrix": {"rows": ["a"], "cols": ["b"], "entries": [[2]]}}'
        )


def test_reducible_modulus_named_in_error():
    with pytest.raises(InvalidField, match=r"\[0, 0, 1\] is reducible"):
        parse_instance(
            '{"field": {"p": 2, "tower": [{"deg": 2, "modulus": [0, 0, 1]}]},'
            ' "matrix": {"rows": [], "cols": [], "entries": []}}'
        )


def test_relax_sets_must_be_disjoint():
    with pytest.raises(SchemaViolation, match="also appears"):
        parse_instance(with_task('{"kind": "relax", "contract": ["a"], "delete": ["a"]}'))


def test_minor_labels_must_be_inside_ground():
    with pytest.raises(SchemaViolation, match=r"\$\.task\.minor"):
        parse_instance(with_task(
            '{"kind": "nfragile", "minor": {"rows": ["q"], "cols": [], "entries": [[]]}}'
        ))


# -- generation ---------------------------------------------------------------


def test_gen_is_deterministic():
    for kind in ("xfragile", "nfragile", "relax", "pipeline"):
        a = gen_random(kind, seed=11)
        b = gen_random(kind, seed=11)
        assert isinstance(a, GeneratedInstance)
        assert serialize_instance(a.instance) == serialize_instance(b.instance)
        assert a.rejections == b.rejections


def test_gen_xfragile_satisfies_predicate():
    for seed in range(6):
        gi = gen_random("xfragile", seed=seed, q=2, rows=2, cols=3, x_rows=1, x_cols=1)
        inst = gi.instance
        assert is_X_fragile_matrix(inst.matrix, inst.task.x)
        assert inst.seed == seed


def test_gen_nfragile_satisfies_predicate():
    for seed in range(4):
        gi = gen_random("nfragile", seed=seed, q=2, rows=3, cols=3, minor_size=2)
        M = ReprMatroid(gi.instance.matrix)
        assert is_N_fragile(M, gi.instance.task.minor)


def test_gen_relax_shape():
    gi = gen_random("relax", seed=5, q=2, rows=2, cols=2)
    t = gi.instance.task
    assert isinstance(t, RelaxTask)
    rest = gi.instance.matrix.labels() - t.contract - t.delete
    assert len(rest) == 2
    assert gi.instance.matrix.enc("r0", "c0") == 0


def test_gen_exhausted_on_unsatisfiable_shape():
    # an all-column X with a column outside it can never gain rank from
    # a pure-column Y, so this shape has no fragile instances
    with pytest.raises(Exhausted):
        gen_random("xfragile", seed=0, q=2, rows=1, cols=2,
                   x_rows=0, x_cols=1, max_attempts=200)


def test_gen_validates_before_sampling():
    with pytest.raises(CapExceeded):
        gen_random("nfragile", seed=0, rows=8, cols=8, minor_size=2)
    with pytest.raises(InvalidArgs):
        gen_random("nope", seed=0)


def test_serialized_sets_are_sorted_lists():
    gi = gen_random("xfragile", seed=1, q=2, rows=2, cols=2, x_rows=1, x_cols=1)
    obj = serialize_instance(gi.instance)
    assert obj["task"]["x"] == sorted(obj["task"]["x"])
    assert isinstance(gi.instance, InstanceFile)
