from hypothesis import given, settings
from hypothesis import strategies as st

from lexdiv import fixtures
from lexdiv.ingest import (
    RecordBatch,
    ingest_data_dir,
    merge,
    parse_cognates,
    parse_concept_relations,
    parse_concepts,
    parse_gaps,
    parse_languages,
    parse_senses,
    parse_sources,
)
from lexdiv.model import Concept, ConceptRelation, LexicalGap, make_sense
from lexdiv.store import Database


class TestParseConcepts:
    def test_three_lines_with_parent_column(self):
        text = (
            "rice-general\tnoun\tcereal grain\n"
            "raw-rice\tnoun\traw state\t\trice-general\n"
            "cooked-rice\tnoun\tcooked\t\trice-general\n"
        )
        result = parse_concepts(text)
        concepts = [r for r in result.records if isinstance(r, Concept)]
        relations = [r for r in result.records if isinstance(r, ConceptRelation)]
        assert len(concepts) == 3
        assert len(relations) == 2
        assert all(rel.kind == "is-a" and rel.target == "rice-general" for rel in relations)
        assert not result.rejected

    def test_unknown_pos_rejected(self):
        result = parse_concepts("c1\tinterjection\tgloss\n")
        assert not result.records
        assert result.rejected[0].rule == "pos"

    def test_empty_file(self):
        result = parse_concepts("")
        assert result.records == [] and result.rejected == []

    def test_comments_and_blanks_skipped(self):
        result = parse_concepts("# header\n\nc1\tnoun\tgloss\n")
        assert len(result.records) == 1

    def test_input_order_preserved(self):
        result = parse_concepts("b\tnoun\tg\na\tnoun\tg\n")
        assert [c.id for c in result.records] == ["b", "a"]


class TestParseSenses:
    def test_single_line(self):
        result = parse_senses("eng\trice\trice-general\tsrc1\n")
        assert len(result.records) == 1
        sense = result.records[0]
        assert sense.key == ("eng", "rice", "rice-general")

    def test_duplicate_collapsed_with_conflict(self):
        text = "eng\trice\trice-general\tsrc1\neng\trice\trice-general\tsrc1\n"
        result = parse_senses(text)
        assert len(result.records) == 1
        assert len(result.conflicts) == 1

    def test_whitespace_lemma_rejected(self):
        result = parse_senses("eng\t   \trice-general\tsrc1\n")
        assert not result.records
        assert result.rejected[0].rule == "empty-lemma"

    def test_lemma_nfc_normalized(self):
        result = parse_senses("fra\tété\tsummer\tsrc1\n")
        assert result.records[0].lemma == "été"


class TestParseGaps:
    def test_examples(self):
        result = parse_gaps("eng\traw-rice\tsrc1\nhun\tbrother\tsrc1\n")
        assert [g.key for g in result.records] == [("eng", "raw-rice"), ("hun", "brother")]

    def test_wrong_column_count_rejected(self):
        result = parse_gaps("eng\traw-rice\n")
        assert result.rejected[0].rule == "columns"


class TestParseCognates:
    LINE = "eng\trice\trice-general\tita\triso\trice-general\tsrc1\n"

    def test_single_relation(self):
        result = parse_cognates(self.LINE)
        assert len(result.records) == 1
        rel = result.records[0]
        assert rel.source == "eng:rice:rice-general"
        assert rel.target == "ita:riso:rice-general"

    def test_same_language_rejected(self):
        result = parse_cognates("eng\trice\trice-general\teng\trice\trice-general\tsrc1\n")
        assert not result.records
        assert result.rejected[0].rule == "same-language"

    def test_both_orders_collapse(self):
        flipped = "ita\triso\trice-general\teng\trice\trice-general\tsrc1\n"
        result = parse_cognates(self.LINE + flipped)
        assert len(result.records) == 1
        assert len(result.conflicts) == 1


class TestParseLanguages:
    def test_empty_coordinates_allowed(self):
        result = parse_languages("xyz\tMystery\t\t\t\n")
        lang = result.records[0]
        assert lang.latitude is None and lang.phylum is None

    def test_lone_coordinate_rejected(self):
        result = parse_languages("xyz\tMystery\t\t10.0\t\n")
        assert result.rejected[0].rule == "latlon"

    def test_bad_code_rejected(self):
        result = parse_languages("EN\tEnglish\t\t\t\n")
        assert result.rejected[0].rule == "code"


class TestParseSources:
    def test_flag_parsing(self):
        result = parse_sources("src1\tCC-BY-4.0\t1\nsrc2\tproprietary\t0\n")
        assert [p.redistributable for p in result.records] == [True, False]

    def test_bad_flag_rejected(self):
        result = parse_sources("src1\tCC\tmaybe\n")
        assert result.rejected[0].rule == "redistributable"


class TestParseConceptRelations:
    def test_kind_checked(self):
        result = parse_concept_relations("a\thypernym\tb\n")
        assert result.rejected[0].rule == "kind"

    def test_self_loop_rejected(self):
        result = parse_concept_relations("a\tis-a\ta\n")
        assert result.rejected[0].rule == "self-loop"


class TestMerge:
    def test_f1_accepted_counts(self, f1):
        db = Database()
        report = merge(f1, db)
        assert report.accepted == {
            "languages": 6,
            "concepts": 4,
            "concept_relations": 2,
            "senses": 8,
            "gaps": 2,
            "cognates": 3,
            "intra_relations": 0,
            "sources": 1,
        }
        assert not report.rejected and not report.conflicts

    def test_gap_conflicting_with_sense_rejected(self, f1_db):
        batch = RecordBatch(gaps=[LexicalGap("eng", "rice-general", fixtures.F1_SOURCE)])
        report = merge(batch, f1_db)
        assert report.count("gaps") == 0
        assert len(report.conflicts) == 1
        assert "sense wins" in report.conflicts[0].resolution
        assert ("eng", "rice-general") not in f1_db.gaps

    def test_sense_evicts_existing_gap(self, f1_db):
        batch = RecordBatch(senses=[make_sense("swa", "mchele", "rice-general", fixtures.F1_SOURCE)])
        report = merge(batch, f1_db)
        assert report.count("senses") == 1
        assert ("swa", "rice-general") not in f1_db.gaps
        assert any("evicted" in c.resolution for c in report.conflicts)
        assert not f1_db.validate()

    def test_dangling_concept_rejected(self, f1_db):
        batch = RecordBatch(senses=[make_sense("eng", "ghost", "no-such", fixtures.F1_SOURCE)])
        report = merge(batch, f1_db)
        assert report.count("senses") == 0
        assert report.rejected[0].rule == "dangling-concept"

    def test_dangling_language_rejected(self, f1_db):
        batch = RecordBatch(senses=[make_sense("zzz", "ghost", "fish", fixtures.F1_SOURCE)])
        report = merge(batch, f1_db)
        assert report.rejected[0].rule == "dangling-language"

    def test_dangling_source_rejected(self, f1_db):
        batch = RecordBatch(senses=[make_sense("eng", "ghost", "fish", "nope")])
        report = merge(batch, f1_db)
        assert report.rejected[0].rule == "dangling-source"

    def test_cycle_creating_isa_rejected(self, f1_db):
        batch = RecordBatch(concept_relations=[ConceptRelation("rice-general", "raw-rice", "is-a")])
        report = merge(batch, f1_db)
        assert report.count("concept_relations") == 0
        assert report.rejected[0].rule == "is-a-cycle"
        assert not f1_db.validate()

    def test_cognate_needs_existing_senses(self, f1_db):
        from lexdiv.model import CrossLingualRelation
        batch = RecordBatch(cognates=[
            CrossLingualRelation("eng:ghost:fish", "ita:pesce:fish", fixtures.F1_SOURCE)])
        report = merge(batch, f1_db)
        assert report.rejected[0].rule == "dangling-sense"

    def test_idempotent(self, f1):
        once = Database()
        merge(f1, once)
        twice = Database()
        merge(f1, twice)
        merge(f1, twice)
        assert once.contents() == twice.contents()

    def test_idempotent_f1_f2(self):
        batch = fixtures.fixture_f1_f2()
        once = Database()
        merge(batch, once)
        twice = Database()
        merge(batch, twice)
        merge(batch, twice)
        assert once.contents() == twice.contents()

    def test_order_independence_of_senses_and_gaps(self, f1):
        # the swa/rice-general gap conflicts with an added sense either way
        extra = make_sense("swa", "mchele", "rice-general", fixtures.F1_SOURCE)

        senses_first = RecordBatch(
            languages=f1.languages, concepts=f1.concepts,
            concept_relations=f1.concept_relations, sources=f1.sources,
            senses=f1.senses + [extra], gaps=f1.gaps)
        db_a = Database()
        merge(senses_first, db_a)

        db_b = Database()
        scaffold = RecordBatch(languages=f1.languages, concepts=f1.concepts,
                               concept_relations=f1.concept_relations, sources=f1.sources)
        merge(scaffold, db_b)
        merge(RecordBatch(gaps=f1.gaps), db_b)
        merge(RecordBatch(senses=f1.senses + [extra]), db_b)

        assert db_a.contents() == db_b.contents()


class TestDataDir:
    def test_round_trip_counts(self, f1_f2_data_dir):
        db = Database()
        report = ingest_data_dir(f1_f2_data_dir, db)
        assert report.count("languages") == 7
        assert report.count("concepts") == 71
        assert report.count("senses") == 25
        assert report.count("gaps") == 68
        assert report.count("cognates") == 3
        assert not report.rejected

    def test_every_line_accounted_for(self, f1_f2_data_dir):
        # parsing is total: accepted + rejected + conflicts == data lines
        data_lines = 0
        for path in f1_f2_data_dir.iterdir():
            for line in path.read_text(encoding="utf-8").splitlines():
                if line.strip() and not line.startswith("#"):
                    data_lines += 1
        db = Database()
        report = ingest_data_dir(f1_f2_data_dir, db)
        assert report.total_accepted() + len(report.rejected) + len(report.conflicts) == data_lines

    def test_accounting_with_bad_lines(self, tmp_path):
        path = tmp_path / "dirty"
        fixtures.write_data_dir(fixtures.fixture_f1(), path)
        with open(path / "senses.tsv", "a", encoding="utf-8") as fh:
            fh.write("eng\t \tfish\tsrc1\n")          # empty lemma
            fh.write("eng\trice\trice-general\tsrc1\n")  # duplicate
            fh.write("eng\tghost\tno-such\tsrc1\n")   # dangling concept
        data_lines = 0
        for file in path.iterdir():
            for line in file.read_text(encoding="utf-8").splitlines():
                if line.strip() and not line.startswith("#"):
                    data_lines += 1
        db = Database()
        report = ingest_data_dir(path, db)
        assert report.total_accepted() + len(report.rejected) + len(report.conflicts) == data_lines
        assert {r.rule for r in report.rejected} == {"empty-lemma", "dangling-concept"}


@settings(max_examples=30)
@given(st.lists(
    st.tuples(st.sampled_from(["eng", "ita", "swa"]),
              st.text(alphabet="abcdef", min_size=1, max_size=4),
              st.sampled_from(["rice-general", "raw-rice", "fish"])),
    max_size=12))
def test_merge_idempotence_property(extra_senses):
    batch = fixtures.fixture_f1()
    for language, lemma, concept in extra_senses:
        batch.senses.append(make_sense(language, lemma, concept, fixtures.F1_SOURCE))

    once = Database()
    merge(batch, once)
    twice = Database()
    merge(batch, twice)
    merge(batch, twice)
    assert once.contents() == twice.contents()
