import pytest

from mvfusion.corpus import CorpusError, check_case, corrected_relations, load_corpus, parse_corpus, parse_expect

SMALL = """
case: one
m: 4
in: 2 1/3
expect: 13/2:1  12/3:1
relation: A3: A[1,2,1]*A[2,3,1] + s*A[1,3,1]
component: 13/2: A[1,2,1]; s
"""


def test_shipped_corpus_shape():
    cases = load_corpus()
    assert len(cases) == 16
    assert cases[0].name == "A2" and cases[0].m == 3
    assert sum(len(c.errata) for c in cases) == 1


def test_parse_small():
    (case,) = parse_corpus(SMALL)
    assert case.inputs == ("2", "1/3")
    assert case.expect == {"13/2": 1, "12/3": 1}
    assert case.relations == [("A3", "A[1,2,1]*A[2,3,1] + s*A[1,3,1]")]
    assert case.components["13/2"] == ["A[1,2,1]", "s"]
    _, problems = check_case(case)
    assert problems == []


def test_negative_control_multiplicity():
    (case,) = parse_corpus(SMALL.replace("12/3:1", "12/3:2"))
    _, problems = check_case(case)
    assert problems and problems[0].startswith("components")


def test_negative_control_relation():
    (case,) = parse_corpus(SMALL.replace("+ s*A[1,3,1]", "- s*A[1,3,1]"))
    _, problems = check_case(case)
    assert any(p.startswith("relations") for p in problems)


def test_errata_are_explicit():
    text = SMALL.replace("+ s*A[1,3,1]", "- s*A[1,3,1]") + \
        "erratum: A[1,2,1]*A[2,3,1] - s*A[1,3,1] -> A[1,2,1]*A[2,3,1] + s*A[1,3,1]\n"
    (case,) = parse_corpus(text)
    assert check_case(case)[1] == []
    assert check_case(case, verbatim=True)[1] != []
    bad = parse_corpus(SMALL + "erratum: x -> y\n")[0]
    with pytest.raises(CorpusError):
        corrected_relations(bad)


@pytest.mark.parametrize("text", ["in: 2\nexpect: 2:1\n", "expect: 2:1\n", "in: 2 3\nexpect: 2\n", "bogus line\n",
                                  "in: 2 3\nexpect: 2:1\nweird: 1\n"])
def test_malformed(text):
    with pytest.raises(CorpusError):
        parse_corpus(text)


def test_parse_expect():
    assert parse_expect("33:1  22/33:1 23/3:2") == {"33": 1, "22/33": 1, "23/3": 2}


def test_empty_corpus():
    assert parse_corpus("# nothing\n") == []
