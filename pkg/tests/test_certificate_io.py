import json
from fractions import Fraction

import pytest

from certificates.bramble import grid_bramble
from certificates.tangle import Tangle
from decompositions.branchwidth import exact_branchwidth
from families.generators import complete, grid, path
from harness.certificate_io import (
    BrambleDoc,
    GlmDoc,
    SeparatorDoc,
    bd_doc,
    bramble_doc,
    dump_certificate,
    glm_doc,
    load_certificate,
    model_doc,
    separator_doc,
    tangle_doc,
    verify_certificate,
    weighted_bramble_doc,
)
from minors.glm import glm_from_grid, model_in_product_from_glm, weighted_bramble_from_product_model
from minors.model import Model
from separators.separator import SeparatorCert
from utils.errors import InputError


class TestDocuments:
    def test_dump_is_sorted_json(self):
        text = dump_certificate(BrambleDoc(elements=[[0], [1, 2]]))
        assert text.endswith("\n")
        assert json.loads(text) == {"elements": [[0], [1, 2]], "kind": "bramble"}
        assert text.index('"elements"') < text.index('"kind"')

    def test_load_picks_kind(self):
        doc = load_certificate(dump_certificate(separator_doc(
            SeparatorCert(frozenset({2, 1}), frozenset(range(4)), Fraction(1, 2))
        )))
        assert isinstance(doc, SeparatorDoc)
        assert doc.x == [1, 2] and doc.c == "1/2"

    def test_load_round_trip(self):
        g, cert = glm_from_grid(3)
        doc = glm_doc(cert)
        assert load_certificate(dump_certificate(doc)) == doc

    @pytest.mark.parametrize(
        "text", ['{"kind": "mystery", "elements": []}', '{"elements": [[0]]}', "not json", '{"kind": "bramble"}']
    )
    def test_load_rejects(self, text):
        with pytest.raises(InputError):
            load_certificate(text)

    def test_model_host_is_optional(self, c4):
        m = Model.complete(c4, [[0], [1], [2, 3]])
        assert model_doc(m).host is None
        assert model_doc(m, include_host=True).host.n == 4


class TestVerify:
    def test_grid_bramble(self):
        g, b = grid_bramble(3)
        result = verify_certificate(load_certificate(dump_certificate(bramble_doc(b))), g)
        assert result.ok and result.value == "4"

    def test_tangle(self, k3):
        result = verify_certificate(tangle_doc(Tangle.of([[0, 1], [1, 2], [0, 2]])), k3)
        assert result.ok and result.value == "2"

    def test_separator(self, p4):
        doc = separator_doc(SeparatorCert(frozenset({1, 2}), frozenset(range(4)), Fraction(1, 2)))
        result = verify_certificate(doc, p4)
        assert result.ok and result.value == "2"

    def test_failing_separator(self, k4):
        doc = separator_doc(SeparatorCert(frozenset({0}), frozenset(range(4)), Fraction(1, 2)))
        result = verify_certificate(doc, k4)
        assert not result.ok and result.reason

    def test_model(self, c4):
        result = verify_certificate(model_doc(Model.complete(c4, [[0], [1], [2, 3]])), c4)
        assert result.ok and result.value == "3"

    def test_model_against_wrong_graph(self, c4, p4):
        result = verify_certificate(model_doc(Model.complete(c4, [[0], [1], [2, 3]])), p4)
        assert not result.ok

    def test_model_with_own_host(self, c4, p4):
        doc = model_doc(Model.complete(c4, [[0], [1], [2, 3]]), include_host=True)
        assert verify_certificate(doc, p4).ok

    def test_branch_decomposition(self, c4):
        width, bd = exact_branchwidth(c4)
        result = verify_certificate(load_certificate(dump_certificate(bd_doc(bd))), c4)
        assert result.ok and result.value == str(width)

    def test_branch_decomposition_of_other_graph(self, c4, p4):
        _, bd = exact_branchwidth(c4)
        result = verify_certificate(bd_doc(bd), p4)
        assert not result.ok

    def test_glm(self):
        g, cert = glm_from_grid(2)
        result = verify_certificate(glm_doc(cert), g)
        assert result.ok and result.value == "3"

    def test_tampered_glm(self):
        g, cert = glm_from_grid(2)
        doc = glm_doc(cert)
        tampered = GlmDoc(paths=doc.paths, sides=[0] * len(doc.sides), kt_branches=doc.kt_branches)
        result = verify_certificate(tampered, g)
        assert not result.ok and "same side" in result.reason

    def test_weighted_bramble(self):
        g, cert = glm_from_grid(2)
        wb = weighted_bramble_from_product_model(g, model_in_product_from_glm(g, cert), 2)
        doc = load_certificate(dump_certificate(weighted_bramble_doc(wb, 2)))
        assert doc.weights == ["1/2", "1/2", "1/2"]
        result = verify_certificate(doc, g)
        assert result.ok and result.value == "3/2"

    def test_weighted_bramble_overload(self):
        g = grid(2, 2)
        doc = load_certificate(
            '{"kind": "weighted-bramble", "elements": [[0], [0, 1]], "weights": ["1", "1"]}'
        )
        assert not verify_certificate(doc, g).ok

    def test_bad_weight(self, k3):
        doc = load_certificate('{"kind": "weighted-bramble", "elements": [[0]], "weights": ["1/0"]}')
        with pytest.raises(InputError):
            verify_certificate(doc, k3)

    def test_out_of_range_vertex(self):
        with pytest.raises(InputError):
            verify_certificate(BrambleDoc(elements=[[9]]), path(3))

    def test_non_bramble(self, c4):
        result = verify_certificate(BrambleDoc(elements=[[0], [2]]), c4)
        assert not result.ok

    def test_clique_singletons(self):
        result = verify_certificate(BrambleDoc(elements=[[v] for v in range(5)]), complete(5))
        assert result.value == "5"
