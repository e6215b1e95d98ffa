"""Tests for the orbit families, invariant curves and closure witnesses."""

import cmath
import math
from collections.abc import Callable

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mobius_orbits.domain.extplane import (
    INFINITY,
    ExtComplex,
    chordal_distance,
    stereo_inv,
)
from mobius_orbits.domain.mobius import (
    QuatMobius,
    evaluate,
    fixed_points,
    maps_equal,
    qcompose,
)
from mobius_orbits.domain.orbits import (
    LONGITUDE_OFFSET,
    ClosureWitness,
    Family,
    d_tau,
    find_closure_witness,
    g_family,
    lambda_family,
    membership_defect,
    phi_family,
    sample_invariant_curve,
    t_orbit,
    u_phi_lambda,
    w_phi,
)
from mobius_orbits.domain.polar import angles_to_params, decompose, extract_polar
from tests.strategies import angles, non_degenerate_quat_mobius, quat_mobius

declinations = st.floats(min_value=0.0, max_value=math.pi)


class TestElementaryFamilies:
    """Tests for d_tau, u_phi_lambda and w_phi."""

    @given(angles)
    def test_d_tau_rotates_the_plane(self, tau: float) -> None:
        """D^τ is z ↦ e^{iτ}z."""
        image = evaluate(d_tau(tau), ExtComplex.finite(2 + 1j))
        assert image.value == pytest.approx(cmath.exp(1j * tau) * (2 + 1j))

    @pytest.mark.parametrize("fn", [d_tau, lambda t: w_phi(t, 0.7)])
    def test_full_turn_is_identity(self, fn: Callable[[float], QuatMobius]) -> None:
        """Parameters 0 and 2π both give the identity transformation."""
        assert maps_equal(fn(0.0), QuatMobius.identity())
        assert maps_equal(fn(2 * math.pi), QuatMobius.identity())

    def test_d_tau_fixes_poles(self) -> None:
        """0 and ∞ are fixed by every D^τ."""
        assert evaluate(d_tau(1.0), ExtComplex.finite(0)).is_zero()
        assert evaluate(d_tau(1.0), INFINITY).is_infinity

    @given(declinations, angles)
    def test_u_sends_pole_opposite_longitude(self, phi: float, lam: float) -> None:
        """u_phi_lambda carries the north pole to longitude λ + π."""
        image = stereo_inv(evaluate(u_phi_lambda(phi, lam), INFINITY)).as_array()
        expected = [
            math.sin(phi) * math.cos(lam + math.pi),
            math.sin(phi) * math.sin(lam + math.pi),
            math.cos(phi),
        ]
        np.testing.assert_allclose(image, expected, atol=1e-9)

    @given(declinations, angles)
    def test_w_is_shifted_u(self, phi: float, lam: float) -> None:
        """w_phi applies the longitude offset to u_phi_lambda."""
        assert w_phi(phi, lam) == u_phi_lambda(phi, lam + LONGITUDE_OFFSET)

    @given(angles, angles, angles)
    def test_w_is_a_subgroup(self, psi: float, phi: float, lam: float) -> None:
        """w_phi(ψ) ∘ w_phi(φ) = w_phi(ψ + φ) at fixed λ."""
        product = qcompose(w_phi(psi, lam), w_phi(phi, lam))
        assert maps_equal(product, w_phi(psi + phi, lam))


class TestOrbit:
    """Tests for t_orbit and the full family g_family."""

    @given(quat_mobius())
    def test_orbit_passes_through_q(self, q: QuatMobius) -> None:
        """T at τ_ζ is q itself."""
        assert maps_equal(t_orbit(q, extract_polar(q).tau), q)

    @given(non_degenerate_quat_mobius(), angles, angles)
    def test_one_parameter_group(self, q: QuatMobius, tau: float, nu: float) -> None:
        """T_τ ∘ T_ν = T_{τ+ν}."""
        product = qcompose(t_orbit(q, tau), t_orbit(q, nu))
        assert maps_equal(product, t_orbit(q, tau + nu))

    @given(quat_mobius(), angles)
    def test_period_two_pi(self, q: QuatMobius, tau: float) -> None:
        """T_{τ+2π} and T_τ are the same map."""
        assert maps_equal(t_orbit(q, tau + 2 * math.pi), t_orbit(q, tau))

    @given(non_degenerate_quat_mobius(), angles)
    def test_closed_form_matches_composition(
        self, q: QuatMobius, tau: float
    ) -> None:
        """The closed form equals W ∘ D^τ ∘ W* built from the decomposition."""
        parts = decompose(q)
        composed = qcompose(parts.W, qcompose(d_tau(tau), parts.Wstar))
        assert maps_equal(t_orbit(q, tau), composed)

    @given(non_degenerate_quat_mobius(), st.floats(min_value=0.1, max_value=6.0))
    def test_members_share_fixed_points(self, q: QuatMobius, tau: float) -> None:
        """Every non-identity T_τ fixes the same two points as q."""
        expected = fixed_points(q)
        found = fixed_points(t_orbit(q, tau))
        direct = max(
            chordal_distance(found[0], expected[0]),
            chordal_distance(found[1], expected[1]),
        )
        swapped = max(
            chordal_distance(found[0], expected[1]),
            chordal_distance(found[1], expected[0]),
        )
        assert min(direct, swapped) <= 1e-8

    def test_identity_orbit_is_d_tau(self, identity: QuatMobius) -> None:
        """The trivial axis defaults to i₃, so the orbit is D^τ."""
        assert maps_equal(t_orbit(identity, 0.7), d_tau(0.7))

    def test_south_pole_orbit(self) -> None:
        """Rotations about −i₃ run the other way round."""
        q = QuatMobius.of(cmath.exp(-0.25j * math.pi), 0)
        assert maps_equal(t_orbit(q, 0.7), d_tau(-0.7))

    @given(declinations, angles, angles)
    def test_g_family_matches_angles(self, phi: float, lam: float, tau: float) -> None:
        """G_{φ,λ,τ} is the rotation by τ about the axis (φ, λ)."""
        assert maps_equal(g_family(phi, lam, tau), angles_to_params(tau, phi, lam))

    @given(declinations, angles)
    def test_g_family_zero_angle(self, phi: float, lam: float) -> None:
        assert maps_equal(g_family(phi, lam, 0.0), QuatMobius.identity())

    @given(st.floats(min_value=0.05, max_value=3.0), angles, st.floats(0.1, 3.0))
    def test_g_family_axis(self, phi: float, lam: float, tau: float) -> None:
        """The axis sits at declination φ and longitude λ + π/2."""
        axis = extract_polar(g_family(phi, lam, tau)).axis_vector
        longitude = lam - LONGITUDE_OFFSET
        expected = [
            math.sin(phi) * math.cos(longitude),
            math.sin(phi) * math.sin(longitude),
            math.cos(phi),
        ]
        np.testing.assert_allclose(axis, expected, atol=1e-8)

    @given(quat_mobius())
    def test_g_family_reaches_q(self, q: QuatMobius) -> None:
        """Every transformation is a member of the full family."""
        data = extract_polar(q)
        assert maps_equal(g_family(data.phi, data.lam, data.tau), q)


class TestDeclinationAndLongitudeFamilies:
    """Tests for phi_family and lambda_family."""

    @given(non_degenerate_quat_mobius())
    def test_phi_family_passes_through_q(self, q: QuatMobius) -> None:
        """Φ at φ_ζ is q."""
        assert maps_equal(phi_family(q, extract_polar(q).phi), q)

    @given(non_degenerate_quat_mobius())
    def test_phi_family_starts_at_d(self, q: QuatMobius) -> None:
        """Φ at 0 is the diagonal factor D."""
        assert maps_equal(phi_family(q, 0.0), d_tau(extract_polar(q).tau))

    @given(non_degenerate_quat_mobius())
    def test_lambda_family_passes_through_q(self, q: QuatMobius) -> None:
        """Λ at arg ω is q."""
        assert maps_equal(lambda_family(q, extract_polar(q).lam), q)

    @given(non_degenerate_quat_mobius(), angles)
    def test_lambda_family_is_periodic(self, q: QuatMobius, lam: float) -> None:
        """Λ_λ and Λ_{λ+2π} coincide."""
        assert maps_equal(lambda_family(q, lam), lambda_family(q, lam + 2 * math.pi))

    @given(non_degenerate_quat_mobius(), angles)
    def test_members_keep_the_angle(self, q: QuatMobius, lam: float) -> None:
        """Every Λ member rotates by τ_ζ."""
        member = extract_polar(lambda_family(q, lam))
        assert member.tau == pytest.approx(extract_polar(q).tau, abs=1e-9)


class TestInvariantCurve:
    """Tests for sample_invariant_curve."""

    def test_quarter_samples_of_z_rotation(self, z_rotation: QuatMobius) -> None:
        """Four samples of 1 under D^τ are 1, i, −1, −i."""
        samples = sample_invariant_curve(z_rotation, ExtComplex.finite(1), 4)
        points = [s.image_of_start for s in samples]
        assert all(p is not None for p in points)
        values = [p.value for p in points if p is not None]
        np.testing.assert_allclose(values, [1, 1j, -1, -1j], atol=1e-15)
        assert [s.parameter for s in samples] == pytest.approx(
            [0.0, math.pi / 2, math.pi, 3 * math.pi / 2]
        )

    def test_first_sample_is_start(self, oblique_rotation: QuatMobius) -> None:
        """τ = 0 is the identity, so the first image is z0."""
        z0 = ExtComplex.finite(0.3 - 2j)
        first = sample_invariant_curve(oblique_rotation, z0, 8)[0]
        assert first.parameter == 0.0
        assert first.image_of_start is not None
        assert first.image_of_start.value == pytest.approx(z0.value)

    def test_x_rotation_traces_meridian(self, x_rotation: QuatMobius) -> None:
        """The south pole circles the x-axis in the plane x = 0."""
        samples = sample_invariant_curve(x_rotation, ExtComplex.finite(0), 12)
        for s in samples:
            assert s.sphere_image is not None
            assert s.sphere_image.eta1 == pytest.approx(0.0, abs=1e-12)

    def test_fixed_point_stays(self, x_rotation: QuatMobius) -> None:
        """σ(e₁) = 1 lies on the axis and never moves."""
        for s in sample_invariant_curve(x_rotation, ExtComplex.finite(1), 6):
            assert s.image_of_start is not None
            assert s.image_of_start.value == pytest.approx(1.0)

    def test_orbit_through_infinity(self, x_rotation: QuatMobius) -> None:
        """∞ reaches 0 halfway round the x-axis."""
        samples = sample_invariant_curve(x_rotation, INFINITY, 2)
        assert samples[0].image_of_start == INFINITY
        assert samples[1].image_of_start is not None
        assert abs(samples[1].image_of_start.value) < 1e-12

    @given(non_degenerate_quat_mobius())
    @settings(max_examples=25)
    def test_samples_stay_on_circle(self, q: QuatMobius) -> None:
        """Every sphere image has the same height along the axis."""
        axis = extract_polar(q).axis_vector
        samples = sample_invariant_curve(q, ExtComplex.finite(0.5j), 10)
        heights = [
            float(axis @ s.sphere_image.as_array())
            for s in samples
            if s.sphere_image is not None
        ]
        assert max(heights) - min(heights) < 1e-9

    def test_rejects_single_sample(self, x_rotation: QuatMobius) -> None:
        """Fewer than two samples is an error."""
        with pytest.raises(ValueError, match="at least 2"):
            sample_invariant_curve(x_rotation, ExtComplex.finite(1), 1)


class TestClosure:
    """Tests for membership_defect and find_closure_witness."""

    @pytest.mark.parametrize("family", ["phi", "lambda"])
    def test_q_is_a_member(self, closure_fixture: QuatMobius, family: Family) -> None:
        """q belongs to both of its families."""
        assert membership_defect(closure_fixture, closure_fixture, family) < 1e-6

    def test_other_phi_member(self, closure_fixture: QuatMobius) -> None:
        """Φ at any declination is found in the Φ family."""
        member = phi_family(closure_fixture, 2.2)
        assert membership_defect(member, closure_fixture, "phi") < 1e-6

    def test_phi_family_not_closed(self, closure_fixture: QuatMobius) -> None:
        """Φ_{0.3} ∘ Φ_{1.1} rotates by another angle and leaves the family."""
        product = qcompose(
            phi_family(closure_fixture, 0.3), phi_family(closure_fixture, 1.1)
        )
        assert membership_defect(product, closure_fixture, "phi") > 1e-3

    def test_lambda_family_not_closed(self, closure_fixture: QuatMobius) -> None:
        """Λ at longitudes 0.8 apart composes to a non-member."""
        product = qcompose(
            lambda_family(closure_fixture, 0.4), lambda_family(closure_fixture, 1.2)
        )
        assert membership_defect(product, closure_fixture, "lambda") > 1e-3

    @pytest.mark.parametrize("family", ["phi", "lambda"])
    def test_witness_found(
        self,
        closure_fixture: QuatMobius,
        rng: np.random.Generator,
        family: Family,
    ) -> None:
        """A seeded search finds a witness whose defect is reproducible."""
        witness = find_closure_witness(closure_fixture, family, rng)
        assert isinstance(witness, ClosureWitness)
        assert witness.family == family
        assert witness.defect > 1e-3
        members = phi_family if family == "phi" else lambda_family
        product = qcompose(
            members(closure_fixture, witness.first),
            members(closure_fixture, witness.second),
        )
        assert membership_defect(product, closure_fixture, family) == pytest.approx(
            witness.defect
        )

    def test_identity_has_no_witness(
        self, identity: QuatMobius, rng: np.random.Generator
    ) -> None:
        """The identity's families are trivial and closed."""
        assert find_closure_witness(identity, "phi", rng, attempts=3) is None

    def test_unreachable_threshold(
        self, closure_fixture: QuatMobius, rng: np.random.Generator
    ) -> None:
        """Chordal defects never exceed 2, so a threshold of 3 finds nothing."""
        witness = find_closure_witness(
            closure_fixture, "lambda", rng, threshold=3.0, attempts=2
        )
        assert witness is None


class TestLongitudeCommutation:
    """Λ members commute only in special cases."""

    @given(non_degenerate_quat_mobius(), angles)
    def test_equal_longitudes_commute(self, q: QuatMobius, lam: float) -> None:
        """Λ_λ and Λ_{λ+2π} commute since they are the same map."""
        first, second = lambda_family(q, lam), lambda_family(q, lam + 2 * math.pi)
        assert maps_equal(qcompose(first, second), qcompose(second, first))

    @given(angles, angles)
    def test_polar_axis_family_commutes(self, mu: float, lam: float) -> None:
        """Rotations about i₃ have a constant Λ family."""
        q = d_tau(1.1)
        first, second = lambda_family(q, mu), lambda_family(q, lam)
        assert maps_equal(qcompose(first, second), qcompose(second, first))

    def test_non_commuting_pair(self, closure_fixture: QuatMobius) -> None:
        """Longitudes 0.4 and 1.2 give members that do not commute."""
        first = lambda_family(closure_fixture, 0.4)
        second = lambda_family(closure_fixture, 1.2)
        assert not maps_equal(qcompose(first, second), qcompose(second, first))
