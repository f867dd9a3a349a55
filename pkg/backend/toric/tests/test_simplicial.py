from unittest import mock

from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from toric import simplicial
from toric.exceptions import InputError, PreconditionError
from toric.simplicial import (
    Face,
    SimplicialComplex,
    boundary_of_simplex,
    deletion,
    equals,
    faces,
    from_facets,
    full_subcomplex,
    ghost_vertices,
    intersection,
    is_face,
    is_simplex,
    join,
    link,
    relabel,
    simplex,
    simplex_on,
    star,
    union,
    vertices,
)


def facet_lists(K):
    return [list(f.vertices) for f in K.facets]


@st.composite
def complexes(draw, max_m=7):
    m = draw(st.integers(min_value=1, max_value=max_m))
    facets = draw(st.lists(st.sets(st.integers(min_value=1, max_value=m), min_size=1), min_size=1, max_size=2 * m))
    covered = set().union(*facets)
    facets += [{v} for v in range(1, m + 1) if v not in covered]
    return from_facets(m, facets)


class FaceTests(SimpleTestCase):
    def test_equality_is_set_equality(self):
        self.assertEqual(Face.of([3, 1, 2]), Face.of([1, 2, 3]))
        self.assertEqual(str(Face.of([3, 1])), "{1,3}")

    def test_rejects_repeats_and_nonpositive_vertices(self):
        with self.assertRaises(InputError):
            Face.of([1, 1])
        with self.assertRaises(InputError):
            Face.of([0, 2])


class ConstructorTests(SimpleTestCase):
    def test_from_facets_absorbs_redundant_facets(self):
        K = from_facets(3, [[1, 2], [2, 3], [2]])
        self.assertEqual(facet_lists(K), [[1, 2], [2, 3]])
        self.assertEqual([list(f.vertices) for f in faces(K)], [[1], [1, 2], [2], [2, 3], [3]])

    def test_duplicate_facets_and_ghosts(self):
        K = from_facets(4, [[1, 2], [1, 2]])
        self.assertTrue(equals(K, from_facets(4, [[1, 2]])))
        self.assertEqual(ghost_vertices(K), (3, 4))

    def test_range_errors(self):
        with self.assertRaises(InputError):
            from_facets(3, [[1, 4]])
        with self.assertRaises(InputError):
            from_facets(0, [])
        with self.assertRaises(InputError):
            simplex(64)

    def test_simplex(self):
        self.assertEqual(facet_lists(simplex(1)), [[1]])
        self.assertEqual(len(faces(simplex(3))), 7)
        self.assertTrue(equals(simplex(3), from_facets(3, [[1, 2, 3]])))

    def test_boundary_of_simplex(self):
        self.assertEqual(facet_lists(boundary_of_simplex([1, 2, 3], 3)), [[1, 2], [1, 3], [2, 3]])
        self.assertEqual(facet_lists(boundary_of_simplex([1, 2], 2)), [[1], [2]])
        K = boundary_of_simplex([1, 2, 4], 5)
        self.assertEqual(ghost_vertices(K), (3, 5))

    def test_boundary_of_a_vertex_is_empty(self):
        K = boundary_of_simplex([2], 3)
        self.assertEqual(K.masks, ())
        self.assertEqual(ghost_vertices(K), (1, 2, 3))

    def test_is_face(self):
        bd = boundary_of_simplex([1, 2, 3], 3)
        self.assertTrue(is_face(bd, [1, 2]))
        self.assertFalse(is_face(bd, [1, 2, 3]))
        self.assertFalse(is_face(from_facets(3, [[1, 2], [2, 3]]), [1, 3]))
        with self.assertRaises(InputError):
            is_face(bd, [4])

    def test_nonface_representation_agrees_with_facets(self):
        K = SimplicialComplex.from_nonfaces(4, [0b0111, 0b1100])
        self.assertEqual(facet_lists(K), [[1, 2, 4], [1, 3], [2, 3]])
        self.assertEqual(K, from_facets(4, [[1, 2, 4], [1, 3], [2, 3]]))
        self.assertFalse([3, 4] in K)


class VertexOperationTests(SimpleTestCase):
    def setUp(self):
        self.bd = boundary_of_simplex([1, 2, 3], 3)

    def test_star(self):
        self.assertEqual(facet_lists(star(self.bd, 1)), [[1, 2], [1, 3]])
        self.assertEqual(star(simplex(4), 2), simplex(4))
        self.assertEqual(facet_lists(star(from_facets(3, [[1, 2], [3]]), 3)), [[3]])

    def test_star_and_link_need_a_real_vertex(self):
        K = from_facets(3, [[1, 2]])
        with self.assertRaises(PreconditionError):
            star(K, 3)
        with self.assertRaises(PreconditionError):
            link(K, 3)

    def test_deletion(self):
        self.assertEqual(facet_lists(deletion(self.bd, 3)), [[1, 2]])
        dropped = deletion(simplex(4), 4)
        self.assertEqual(facet_lists(dropped), [[1, 2, 3]])
        self.assertEqual(ghost_vertices(dropped), (4,))
        self.assertEqual(facet_lists(deletion(from_facets(3, [[1, 2], [2, 3]]), 2)), [[1], [3]])

    def test_link(self):
        self.assertEqual(facet_lists(link(self.bd, 1)), [[2], [3]])
        self.assertEqual(facet_lists(link(simplex(3), 2)), [[1, 3]])
        self.assertEqual(facet_lists(link(from_facets(4, [[1, 2, 3], [3, 4]]), 3)), [[1, 2], [4]])


class JoinAndRestrictionTests(SimpleTestCase):
    def test_join_examples(self):
        self.assertEqual(facet_lists(join(simplex_on([1], 2), simplex_on([2], 2))), [[1, 2]])
        bd = boundary_of_simplex([1, 2, 3], 3)
        self.assertEqual(facet_lists(join(simplex_on([1], 3), link(bd, 1))), [[1, 2], [1, 3]])
        square = join(boundary_of_simplex([1, 2], 4), boundary_of_simplex([3, 4], 4))
        self.assertEqual(facet_lists(square), [[1, 3], [1, 4], [2, 3], [2, 4]])

    def test_join_rejects_overlap(self):
        with self.assertRaises(PreconditionError):
            join(simplex_on([1, 2], 3), simplex_on([2, 3], 3))

    def test_full_subcomplex(self):
        edge, mapping = full_subcomplex(boundary_of_simplex([1, 2, 3], 3), [1, 2])
        self.assertEqual(edge, simplex(2))
        self.assertEqual(mapping, {1: 1, 2: 2})
        K = from_facets(4, [[1, 2, 3], [3, 4]])
        restricted, mapping = full_subcomplex(K, {1, 3, 4})
        self.assertEqual(facet_lists(restricted), [[1, 2], [2, 3]])
        self.assertEqual(mapping, {1: 1, 3: 2, 4: 3})
        self.assertEqual(full_subcomplex(K, range(1, 5))[0], K)

    def test_full_subcomplex_is_a_relabeled_restriction(self):
        K = from_facets(5, [[1, 2, 5], [2, 4], [3, 5]])
        with mock.patch.object(simplicial, "relabel", wraps=simplicial.relabel) as spy:
            restricted, mapping = full_subcomplex(K, [2, 4, 5])
        spy.assert_called_once()
        self.assertEqual(spy.call_args.args[1:], ({2: 1, 4: 2, 5: 3}, 3))
        self.assertEqual(facet_lists(restricted), [[1, 2], [1, 3]])
        self.assertEqual(restricted, relabel(from_facets(5, [[2, 4], [2, 5], [5]]), mapping, 3))

    def test_relabel(self):
        K = from_facets(3, [[1, 2]])
        moved = relabel(K, {1: 3, 2: 1}, 3)
        self.assertEqual(facet_lists(moved), [[1, 3]])
        with self.assertRaises(InputError):
            relabel(K, {1: 2}, 3)

    def test_is_simplex(self):
        self.assertFalse(is_simplex(boundary_of_simplex([1, 2, 3], 3)))
        self.assertTrue(is_simplex(simplex_on([1, 3], 4)))

    def test_union_and_intersection_need_a_common_vertex_set(self):
        with self.assertRaises(InputError):
            union(simplex(2), simplex(3))


class SimplicialPropertyTests(SimpleTestCase):
    @settings(max_examples=60, deadline=None)
    @given(complexes())
    def test_star_deletion_pushout(self, K):
        for v in vertices(K):
            self.assertEqual(union(star(K, v), deletion(K, v)), K)
            self.assertEqual(intersection(star(K, v), deletion(K, v)), link(K, v))

    @settings(max_examples=60, deadline=None)
    @given(complexes())
    def test_star_is_vertex_joined_with_link(self, K):
        for v in vertices(K):
            self.assertEqual(star(K, v), join(simplex_on([v], K.m), link(K, v)))

    @settings(max_examples=60, deadline=None)
    @given(complexes())
    def test_downward_closed(self, K):
        closed = K.face_masks
        for face in closed:
            for v in Face(face).vertices:
                self.assertIn(face & ~(1 << (v - 1)), closed)
