from fractions import Fraction
from pathlib import Path

import pytest

from mrfw.corpus import (
    PREMODULAR_BUILDERS,
    RING_BUILDERS,
    TABLE_BUILDERS,
    fibonacci_ring,
    s3_table,
    write_corpus,
)
from mrfw.scalars import CycNumber, QuadExt
from mrfw.serialize import (
    DocumentError,
    canonical_dumps,
    load_document,
    parse_document,
    premodular_from_payload,
    premodular_to_doc,
    ring_from_payload,
    ring_to_doc,
    save_document,
    scalar_from_json,
    scalar_to_json,
    table_from_payload,
    table_to_doc,
)

CORPUS = Path(__file__).resolve().parents[1] / "src" / "mrfw" / "corpus"


class TestScalars:
    @pytest.mark.parametrize(
        "x",
        [
            Fraction(3),
            Fraction(-7, 2),
            QuadExt(1, 2, 5),
            QuadExt(Fraction(1, 2), Fraction(-3, 4), 13),
            CycNumber.root_of_unity(5),
            CycNumber(8, [Fraction(1, 2), 0, -1, 0]),
        ],
    )
    def test_round_trip(self, x):
        encoded = scalar_to_json(x)
        decoded = scalar_from_json(encoded)
        if isinstance(x, Fraction):
            assert decoded == x
        else:
            assert decoded == x

    def test_rational_forms(self):
        assert scalar_to_json(Fraction(4)) == 4
        assert scalar_to_json(Fraction(1, 3)) == "1/3"
        assert scalar_from_json("-2/5") == Fraction(-2, 5)

    def test_rational_quadext_collapses(self):
        assert scalar_to_json(QuadExt(7)) == 7

    def test_rejects_garbage(self):
        with pytest.raises(DocumentError):
            scalar_from_json("1.5")
        with pytest.raises(DocumentError):
            scalar_from_json({"p": 1})
        with pytest.raises(DocumentError):
            scalar_from_json(True)


class TestEnvelope:
    def test_unknown_kind(self):
        with pytest.raises(DocumentError, match="kind"):
            parse_document('{"schema": 1, "kind": "widget", "payload": {}}')

    def test_unknown_field(self):
        with pytest.raises(DocumentError, match="unknown fields"):
            parse_document(
                '{"schema": 1, "kind": "report", "payload": {}, "extra": 1}'
            )

    def test_schema_version(self):
        with pytest.raises(DocumentError, match="schema"):
            parse_document('{"schema": 99, "kind": "report", "payload": {}}')

    def test_not_json(self):
        with pytest.raises(DocumentError, match="JSON"):
            parse_document("{nope")

    def test_negative_structure_constant(self):
        with pytest.raises(DocumentError):
            ring_from_payload({"labels": ["1"], "N": [[[-1]]]})


class TestRoundTrip:
    @pytest.mark.parametrize("name", sorted(RING_BUILDERS))
    def test_rings(self, name):
        ring = RING_BUILDERS[name]()
        doc = ring_to_doc(ring)
        back = ring_from_payload(doc["payload"])
        assert back.N == ring.N and back.labels == ring.labels

    @pytest.mark.parametrize("name", sorted(TABLE_BUILDERS))
    def test_tables(self, name):
        t = TABLE_BUILDERS[name]()
        back = table_from_payload(table_to_doc(t)["payload"])
        assert back.characters == t.characters
        assert back.class_sizes == t.class_sizes
        assert back.order == t.order

    @pytest.mark.parametrize("name", sorted(PREMODULAR_BUILDERS))
    def test_premodular(self, name):
        ring, dims, twists = PREMODULAR_BUILDERS[name]()
        doc = premodular_to_doc(ring, dims, twists)
        ring2, dims2, twists2 = premodular_from_payload(doc["payload"])
        assert ring2.N == ring.N
        assert [CycNumber.from_rational(d) if isinstance(d, (int, Fraction)) else d for d in dims2] == [
            d if isinstance(d, CycNumber) else CycNumber.from_rational(d) for d in dims
        ]

    def test_canonical_idempotent(self, tmp_path):
        doc = ring_to_doc(fibonacci_ring())
        p = tmp_path / "fib.json"
        save_document(doc, p)
        first = p.read_bytes()
        save_document(load_document(p), p)
        assert p.read_bytes() == first

    def test_canonical_sorted(self):
        text = canonical_dumps(table_to_doc(s3_table()))
        assert text.endswith("\n")
        assert text.index('"kind"') < text.index('"payload"')


class TestBundledCorpus:
    def test_files_match_builders(self, tmp_path):
        # the shipped corpus is exactly what write_corpus regenerates
        names = write_corpus(tmp_path)
        assert sorted(p.name for p in CORPUS.glob("*.json")) == sorted(names)
        for name in names:
            assert (tmp_path / name).read_bytes() == (CORPUS / name).read_bytes()

    def test_all_load(self):
        for p in CORPUS.glob("*.json"):
            doc = load_document(p)
            assert doc["kind"] in ("ring", "chartable", "premodular")
