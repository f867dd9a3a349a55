from unittest import mock

from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings
from hypothesis import strategies as st

from toric.exceptions import InputError, InvariantError, PreconditionError
from toric.mmf import (
    JoinDecomposition,
    MmfSet,
    brute_force_mmf,
    build_kbar,
    complex_from_mmf,
    intermediary_complex,
    join_decomposition,
    missing_faces,
    mmf,
    mutually_disjoint,
)
from toric.simplicial import Face, SimplicialComplex, boundary_of_simplex, from_facets, simplex

from .test_simplicial import complexes, facet_lists

CYCLE_WITH_CHORD = [[1, 2], [2, 3], [3, 4], [1, 4], [1, 3]]


def face_lists(faces):
    return [list(f.vertices) for f in faces]


class MissingFaceTests(SimpleTestCase):
    def test_missing_faces(self):
        self.assertEqual(face_lists(missing_faces(boundary_of_simplex([1, 2, 3], 3), 3)), [[1, 2, 3]])
        self.assertEqual(missing_faces(simplex(4), 4), [])
        self.assertEqual(face_lists(missing_faces(from_facets(3, [[1, 2], [2, 3]]), 3)), [[1, 3], [1, 2, 3]])

    def test_max_card_is_bounded_by_m(self):
        with self.assertRaises(InputError):
            missing_faces(simplex(3), 4)

    def test_mmf_examples(self):
        boundary = mmf(boundary_of_simplex([1, 2, 3, 4], 4))
        self.assertEqual(face_lists(boundary.faces), [[1, 2, 3, 4]])
        self.assertTrue(boundary.disjoint)
        self.assertEqual(mmf(simplex(5)), MmfSet((), True))
        chord = mmf(from_facets(4, CYCLE_WITH_CHORD))
        self.assertEqual(face_lists(chord.faces), [[1, 2, 3], [1, 3, 4], [2, 4]])
        self.assertFalse(chord.disjoint)

    def test_ghosts_need_an_override(self):
        K = from_facets(3, [[1, 2]])
        with self.assertRaises(PreconditionError):
            mmf(K)
        with self.assertLogs("toric.mmf", level="WARNING"):
            found = mmf(K, allow_ghosts=True)
        self.assertEqual(face_lists(found.faces), [[3]])

    def test_brute_force_is_limited(self):
        with self.assertRaises(InputError):
            brute_force_mmf(simplex(13))

    @settings(max_examples=80, deadline=None)
    @given(complexes(max_m=8))
    def test_matches_brute_force(self, K):
        self.assertEqual(mmf(K), brute_force_mmf(K))

    @settings(max_examples=80, deadline=None)
    @given(complexes(max_m=8))
    def test_facet_search_matches_brute_force(self, K):
        with self.settings(TORIC={"FACE_SET_LIMIT": 0}):
            self.assertEqual(mmf(K), brute_force_mmf(K))

    def test_facet_search_edge_cases(self):
        with self.settings(TORIC={"FACE_SET_LIMIT": 0}):
            self.assertEqual(mmf(simplex(4)), MmfSet((), True))
            self.assertEqual(face_lists(mmf(from_facets(4, CYCLE_WITH_CHORD)).faces), [[1, 2, 3], [1, 3, 4], [2, 4]])
            found = mmf(SimplicialComplex.from_masks(2, []), allow_ghosts=True)
        self.assertEqual(face_lists(found.faces), [[1], [2]])

    def test_thirty_vertices_never_builds_the_face_set(self):
        K = boundary_of_simplex(range(1, 31), 30)
        found = mmf(K)
        self.assertEqual(found.faces, (Face.of(range(1, 31)),))
        self.assertTrue(found.disjoint)
        self.assertNotIn("face_masks", K.__dict__)

    def test_large_kbar_from_facets(self):
        K = build_kbar(40, range(1, 26), range(20, 41))
        stored = SimplicialComplex.from_masks(K.m, K.masks)
        self.assertEqual(face_lists(mmf(stored).faces), [list(range(1, 26)), list(range(20, 41))])


class DisjointnessTests(SimpleTestCase):
    def test_examples(self):
        self.assertTrue(mutually_disjoint([]))
        self.assertTrue(mutually_disjoint([[1, 2], [3, 4]]))
        self.assertFalse(mutually_disjoint([[1, 2, 3], [3, 4]]))

    def test_stale_flag_is_an_invariant_breach(self):
        with self.assertRaises(InvariantError):
            mutually_disjoint(MmfSet((Face.of([1, 2]), Face.of([2, 3])), True))


class ComplexFromMmfTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(complex_from_mmf(3, [[1, 2, 3]]), boundary_of_simplex([1, 2, 3], 3))
        self.assertEqual(complex_from_mmf(4, []), simplex(4))
        kbar = complex_from_mmf(4, [[1, 2, 3], [3, 4]])
        self.assertEqual(facet_lists(kbar), [[1, 2, 4], [1, 3], [2, 3]])
        self.assertEqual(face_lists(mmf(kbar).faces), [[1, 2, 3], [3, 4]])

    def test_comparable_faces_are_rejected(self):
        with self.assertRaises(PreconditionError):
            complex_from_mmf(3, [[1, 2], [1, 2, 3]])
        with self.assertRaises(InputError):
            complex_from_mmf(3, [[1, 4]])

    @override_settings(TORIC={"FACE_SET_LIMIT": 3})
    def test_large_m_keeps_the_nonface_generators(self):
        K = complex_from_mmf(5, [[1, 2], [3, 4]])
        self.assertEqual(K.nonface_masks, (0b0011, 0b1100))
        self.assertTrue([1, 3, 5] in K)
        self.assertFalse([1, 2] in K)
        self.assertEqual(face_lists(mmf(K).faces), [[1, 2], [3, 4]])

    @settings(max_examples=60, deadline=None)
    @given(complexes(max_m=7))
    def test_round_trip(self, K):
        found = mmf(K)
        rebuilt = complex_from_mmf(K.m, found.faces)
        self.assertEqual(rebuilt, K)
        self.assertEqual(mmf(rebuilt), found)


class KbarTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(facet_lists(build_kbar(3, [1, 2], [2, 3])), [[1, 3], [2]])
        self.assertEqual(facet_lists(build_kbar(4, [1, 2, 3], [3, 4])), [[1, 2, 4], [1, 3], [2, 3]])

    def test_every_violation_is_reported(self):
        with self.assertRaisesMessage(PreconditionError, "vertex sets coincide"):
            build_kbar(3, [1, 2], [1, 2])
        with self.assertRaises(PreconditionError) as caught:
            build_kbar(5, [1, 2], [3, 4])
        self.assertIn("do not cover", str(caught.exception))
        self.assertIn("are disjoint", str(caught.exception))

    def test_intermediary_complex_relabels_onto_the_support(self):
        K = from_facets(5, [[1, 3], [2], [4, 5], [1, 4], [3, 4]])
        found = mmf(K)
        self.assertIn(Face.of([1, 2]), found.faces)
        self.assertIn(Face.of([2, 3]), found.faces)
        kbar, mapping = intermediary_complex(K, [1, 2], [2, 3])
        self.assertEqual(mapping, {1: 1, 2: 2, 3: 3})
        self.assertEqual(kbar, build_kbar(3, [1, 2], [2, 3]))

    def test_intermediary_needs_minimal_missing_faces(self):
        with self.assertRaises(PreconditionError):
            intermediary_complex(boundary_of_simplex([1, 2, 3], 3), [1, 2], [2, 3])


class JoinDecompositionTests(SimpleTestCase):
    def test_boundary_and_simplex(self):
        split = join_decomposition(boundary_of_simplex([1, 2, 3, 4], 4))
        self.assertEqual(split.k0_vertices, Face(0))
        self.assertEqual(face_lists(split.boundary_factors), [[1, 2, 3, 4]])
        split = join_decomposition(simplex(3))
        self.assertEqual(split.k0_vertices, Face.of([1, 2, 3]))
        self.assertEqual(split.boundary_factors, ())

    def test_two_disjoint_faces(self):
        K = complex_from_mmf(5, [[1, 2], [3, 4]])
        split = join_decomposition(K)
        self.assertEqual(split.k0_vertices, Face.of([5]))
        self.assertEqual(face_lists(split.boundary_factors), [[1, 2], [3, 4]])
        self.assertEqual(split.reassemble(), K)

    def test_intersecting_faces_are_rejected(self):
        with self.assertRaises(PreconditionError):
            join_decomposition(from_facets(4, CYCLE_WITH_CHORD))

    def test_reassembly_mismatch_is_an_invariant_breach(self):
        wrong = SimplicialComplex.from_masks(3, [0b001])
        with mock.patch.object(JoinDecomposition, "reassemble", return_value=wrong):
            with self.assertRaises(InvariantError):
                join_decomposition(boundary_of_simplex([1, 2, 3], 3))

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=2, max_value=9).flatmap(
        lambda m: st.tuples(st.just(m), st.permutations(range(1, m + 1)), st.integers(min_value=2, max_value=m))
    ))
    def test_reassembles_random_disjoint_faces(self, case):
        m, order, cut = case
        blocks = [order[:cut]]
        if m - cut >= 2:
            blocks.append(order[cut:])
        K = complex_from_mmf(m, blocks)
        self.assertEqual(join_decomposition(K).reassemble(), K)
