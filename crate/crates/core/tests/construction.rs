use fibform_core::gamma::sqrt_p_star;
use fibform_core::modarith::is_prime;
use fibform_core::oracle::{brute_force_case1, brute_force_case2, SearchBudget};
use fibform_core::*;
use num_bigint::BigInt;

fn primes(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo..=hi).filter(|&p| is_prime(p))
}

#[test]
fn gamma_identities_up_to_199() {
    for p in primes(7, 199) {
        let ctx = PrimeContext::new(p).unwrap();
        let gamma = compute_gamma(&ctx);
        assert!(verify_norm_product(&ctx, &gamma).unwrap(), "norm, p = {p}");
        assert!(
            verify_sigma5_relation(&ctx, &gamma).unwrap(),
            "sigma5, p = {p}"
        );
        assert!(gauss_period_check(&ctx), "gauss period, p = {p}");
    }
}

#[test]
fn sqrt_p_star_squares_to_p_star() {
    for p in primes(7, 97) {
        let ctx = PrimeContext::new(p).unwrap();
        let s = sqrt_p_star(&ctx);
        let sq = s.mul(&s).unwrap();
        assert_eq!(
            sq.as_constant(),
            Some(&ZAlpha::from_int(ctx.p_star)),
            "p = {p}"
        );
    }
}

#[test]
fn coordinates_vanish_and_are_half_integral() {
    for p in primes(7, 199) {
        let ctx = PrimeContext::new(p).unwrap();
        let gamma = compute_gamma(&ctx);
        let k = extract_k_coordinates(&ctx, &gamma).unwrap();
        assert!(k.z.is_zero(), "p = {p}");
        match ctx.case() {
            FormCase::CaseI => {
                assert!(k.x.is_zero(), "p = {p}");
                assert!(k.w.scaled_int(1).is_some() && k.y.scaled_int(1).is_some());
            }
            FormCase::CaseII => {
                assert!(k.w.is_zero(), "p = {p}");
                assert!(k.x.scaled_int(1).is_some() && k.y.scaled_int(1).is_some());
            }
        }
        let ib = integral_basis_coords(&k).unwrap();
        assert_eq!(ib.d, BigInt::from(0), "p = {p}");
        assert_eq!(
            k.reconstruct_times_four(&ctx).unwrap(),
            gamma.scale(&ZAlpha::from_int(4))
        );
    }
}

#[test]
fn every_prime_up_to_199_is_represented() {
    for p in primes(3, 199) {
        let rep = represent(p).unwrap();
        assert!(verify_representation(&rep), "p = {p}");
        assert_eq!(rep.case, FormCase::for_prime(p));
        assert_eq!(rep.u.bit(0), rep.v.bit(0), "parity, p = {p}");
    }
}

#[test]
fn oracle_and_construction_agree_on_validity() {
    let budget = SearchBudget::default();
    for p in primes(3, budget.enabled_max_p) {
        let (u, v) = match FormCase::for_prime(p) {
            FormCase::CaseI => brute_force_case1(p, &budget).unwrap(),
            FormCase::CaseII => brute_force_case2(p, &budget).unwrap(),
        };
        let oracle = Representation::new(p, FormCase::for_prime(p), u, v);
        assert!(verify_representation(&oracle), "oracle, p = {p}");
        let built = represent(p).unwrap();
        assert!(verify_representation(&built), "construction, p = {p}");
        if built.case == FormCase::CaseII {
            // the u-scan is complete, so the constructed u is at least the minimum
            assert!(oracle.u <= built.u, "p = {p}");
        }
    }
}

#[test]
fn reduced_pairs_are_minimal_in_their_orbit() {
    for p in primes(5, 199).filter(|p| p % 4 == 1) {
        let rep = represent(p).unwrap();
        let unit = norm_plus4_unit(p).unwrap();
        let back = orbit_step(&rep, &unit, Direction::Backward).unwrap();
        let fwd = orbit_step(&rep, &unit, Direction::Forward).unwrap();
        assert!(back.u >= rep.u && fwd.u > rep.u, "p = {p}");
        assert_eq!(reduce_in_orbit(&rep).unwrap(), rep);
    }
}
