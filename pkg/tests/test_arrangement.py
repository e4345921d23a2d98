"""
Unit tests for the arrangement data model and validation
"""

import pytest

from harbourne.arrangement import (
    Arrangement,
    ComponentClass,
    SingularitySpectrum,
    SurfaceKind,
    determined_pair_count,
    euler_numbers,
    f_moments,
    require_valid,
    self_intersection,
    validate,
)
from harbourne.catalog import diagonal_config, hirzebruch_gauss, holzapfel_eisenstein, klein
from harbourne.exceptions import NotOrdinary, ValidationError, WrongSurface
from tests.conftest import PROPERTY_CASES, elliptic_arrangement, line_arrangement, random_spectrum


class TestSingularitySpectrum:
    """Test spectrum normalization"""

    def test_zero_counts_are_dropped(self):
        assert SingularitySpectrum.of({2: 0, 3: 4}) == SingularitySpectrum.of({3: 4})

    def test_duplicate_keys_merge(self):
        spectrum = SingularitySpectrum(((3, 1), (4, 2), (3, 2)))
        assert spectrum.as_dict() == {3: 3, 4: 2}

    def test_sorted_by_multiplicity(self):
        assert SingularitySpectrum.of({6: 3, 3: 36}).counts == ((3, 36), (6, 3))

    def test_rejects_multiplicity_below_two(self):
        with pytest.raises(ValidationError):
            SingularitySpectrum.of({1: 3})

    def test_rejects_negative_count(self):
        with pytest.raises(ValidationError):
            SingularitySpectrum.of({3: -1})

    def test_points_largest_first(self):
        assert SingularitySpectrum.of({2: 1, 4: 2}).points() == [4, 4, 2]

    def test_str(self):
        assert str(SingularitySpectrum.of({4: 21, 3: 28})) == "{3:28, 4:21}"

    def test_only(self):
        assert SingularitySpectrum.of({4: 3}).only(4)
        assert not SingularitySpectrum.of({3: 1, 4: 3}).only(4)


class TestMoments:
    """Test f_moments"""

    def test_empty_spectrum(self):
        assert f_moments(SingularitySpectrum()) == (0, 0, 0)

    def test_klein(self):
        assert f_moments(SingularitySpectrum.of({3: 28, 4: 21})) == (49, 168, 588)

    def test_holzapfel(self):
        assert f_moments(SingularitySpectrum.of({4: 3})) == (3, 12, 48)

    def test_moment_ordering(self, rng):
        for _ in range(PROPERTY_CASES):
            spectrum = random_spectrum(rng)
            f0, f1, f2 = f_moments(spectrum)
            assert f2 >= f1 >= 2 * f0
            assert (f1 == 2 * f0) == spectrum.only(2)

    def test_nodes_only_reach_the_lower_moment(self, rng):
        for _ in range(100):
            spectrum = random_spectrum(rng, max_k=2)
            f0, f1, _ = f_moments(spectrum)
            assert spectrum.only(2)
            assert f1 == 2 * f0


class TestSelfIntersection:
    """Test C^2 bookkeeping"""

    def test_diagonal(self):
        assert self_intersection(diagonal_config()) == 6

    def test_klein(self):
        # 21 lines: C^2 = 21^2
        assert self_intersection(klein()) == 441

    def test_override(self):
        arr = Arrangement(
            "override",
            SurfaceKind.PROJECTIVE_PLANE,
            False,
            (ComponentClass(1, 9, 2),),
            SingularitySpectrum.of({3: 1}),
            c_square_override=36,
        )
        assert self_intersection(arr) == 36

    def test_non_ordinary_without_override(self):
        arr = Arrangement(
            "bare", SurfaceKind.PROJECTIVE_PLANE, False, (ComponentClass(0, 1, 3),), SingularitySpectrum.of({3: 1})
        )
        with pytest.raises(NotOrdinary):
            self_intersection(arr)


class TestEulerNumbers:
    """Test Euler numbers on abelian surfaces"""

    def test_holzapfel(self):
        assert euler_numbers(holzapfel_eisenstein()).e_c == -9

    def test_hirzebruch(self):
        assert euler_numbers(hirzebruch_gauss()) == (-3, -4, 3)

    def test_complement_is_negative_of_curve(self):
        numbers = euler_numbers(diagonal_config())
        assert numbers.e_complement == -numbers.e_c

    def test_wrong_surface(self):
        with pytest.raises(WrongSurface):
            euler_numbers(klein())

    def test_not_ordinary(self):
        arr = Arrangement(
            "x", SurfaceKind.ABELIAN, False, (ComponentClass(1, 0, 2),), SingularitySpectrum.of({2: 1})
        )
        with pytest.raises(NotOrdinary):
            euler_numbers(arr)


class TestValidate:
    """Test hard errors and soft warnings"""

    def test_catalog_entries_are_valid(self):
        for arr in (klein(), hirzebruch_gauss(), holzapfel_eisenstein(), diagonal_config()):
            report = validate(arr)
            assert report.ok, report.errors
            assert report.warnings == ()

    def test_adjunction_failure(self):
        arr = Arrangement(
            "bad", SurfaceKind.ABELIAN, True, (ComponentClass(1, 2, 4),), SingularitySpectrum.of({4: 1})
        )
        report = validate(arr)
        assert not report.ok
        assert any("adjunction" in error for error in report.errors)

    def test_rational_curve_on_abelian_surface(self):
        arr = Arrangement(
            "bad", SurfaceKind.ABELIAN, True, (ComponentClass(0, -2, 2),), SingularitySpectrum.of({2: 1})
        )
        assert any("rational" in error for error in validate(arr).errors)

    def test_plane_self_intersection_must_be_square(self):
        arr = Arrangement(
            "bad", SurfaceKind.PROJECTIVE_PLANE, True, (ComponentClass(0, 2, 1),), SingularitySpectrum()
        )
        assert not validate(arr).ok

    def test_plane_genus_above_arithmetic_genus(self):
        arr = Arrangement(
            "bad", SurfaceKind.PROJECTIVE_PLANE, True, (ComponentClass(2, 9, 1),), SingularitySpectrum()
        )
        assert any("arithmetic genus" in error for error in validate(arr).errors)

    def test_pair_count_mismatch_is_hard_for_ordinary(self):
        # 4 lines with only 2 double points: pair count 2 != 6
        report = validate(line_arrangement(4, {2: 2}))
        assert any("pair count" in error for error in report.errors)

    def test_generic_surface_has_no_pair_constraint(self):
        arr = Arrangement(
            "odd", SurfaceKind.GENERIC, True, (ComponentClass(1, 0, 3),), SingularitySpectrum.of({2: 1})
        )
        assert validate(arr).ok
        assert determined_pair_count(arr) is None

    def test_override_requires_non_ordinary(self):
        arr = Arrangement(
            "bad",
            SurfaceKind.PROJECTIVE_PLANE,
            True,
            (ComponentClass(0, 1, 3),),
            SingularitySpectrum.of({2: 3}),
            c_square_override=9,
        )
        assert any("override" in error for error in validate(arr).errors)

    def test_non_ordinary_warnings(self):
        arr = Arrangement(
            "soft", SurfaceKind.PROJECTIVE_PLANE, False, (ComponentClass(0, 1, 3),), SingularitySpectrum.of({3: 2})
        )
        report = validate(arr)
        assert report.ok
        assert any("c_square_override" in warning for warning in report.warnings)
        assert any("pair count" in warning for warning in report.warnings)

    def test_multiplicity_above_component_count_warns(self):
        arr = elliptic_arrangement(SingularitySpectrum.of({5: 1}), d=4)
        report = validate(arr)
        assert report.ok
        assert any("branches" in warning for warning in report.warnings)

    def test_require_valid_attaches_warnings(self):
        arr = require_valid(elliptic_arrangement(SingularitySpectrum.of({5: 1}), d=4))
        assert arr.warnings
        # Warnings are not part of equality
        assert arr == elliptic_arrangement(SingularitySpectrum.of({5: 1}), d=4)

    def test_require_valid_raises_with_errors(self):
        with pytest.raises(ValidationError) as excinfo:
            require_valid(line_arrangement(4, {2: 2}))
        assert excinfo.value.errors


class TestArrangementProperties:
    """Test derived quantities"""

    def test_genus_of_lines(self):
        assert klein().genus == -20

    def test_elliptic_genus(self):
        assert hirzebruch_gauss().genus == 1
        assert hirzebruch_gauss().is_elliptic()

    def test_line_arrangement(self):
        assert klein().is_line_arrangement()
        assert not hirzebruch_gauss().is_line_arrangement()

    def test_scaled(self):
        scaled = holzapfel_eisenstein().scaled(3)
        assert scaled.label == "holzapfel-eisensteinx3"
        assert scaled.d == 18
        assert scaled.spectrum.as_dict() == {4: 9}
        assert scaled.genus_minus_one == 0

    def test_surface_accepts_document_spelling(self):
        arr = Arrangement("x", "abelian", True, (ComponentClass(1, 0, 2),), SingularitySpectrum.of({2: 1}))
        assert arr.surface is SurfaceKind.ABELIAN
