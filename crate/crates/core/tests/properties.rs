use proptest::prelude::*;

use ribbon_moduli::local::{EpsIdeal, EpsPoly, Poly};
use ribbon_moduli::moduli::{enumerate_strata, specializations_of, stratum_dim};
use ribbon_moduli::stability::{classify_glb, slopes, GrClass, SheafPoint};
use ribbon_moduli::{GlbDescriptor, RibbonInvariants, StabilityVerdict};

const P: u64 = 101;

fn indices() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(1i64..8, 0..5)
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-3i64..4, 0..4).prop_map(|c| Poly::from_coeffs(P, &c))
}

fn eps_poly() -> impl Strategy<Value = EpsPoly> {
    (poly(), poly()).prop_map(|(a, b)| EpsPoly::new(a, b))
}

/// `(ε, s^n(s - c), extra)`, always of finite colength.
fn finite_ideal() -> impl Strategy<Value = EpsIdeal> {
    (0usize..4, 0i64..5, eps_poly()).prop_map(|(n, c, extra)| {
        let mut gens = vec![
            EpsPoly::epsilon(P),
            EpsPoly::from_poly(&Poly::monomial(P, 1, n) * &Poly::linear(P, c)),
        ];
        gens.push(extra);
        EpsIdeal::from_generators(P, &gens).unwrap()
    })
}

proptest! {
    #[test]
    fn parity_depends_only_on_degree_mod_two(d in -20i64..20, idx in indices()) {
        prop_assert_eq!(GlbDescriptor::new(d, idx.clone()).is_ok(), GlbDescriptor::new(d + 2, idx).is_ok());
    }

    #[test]
    fn summand_degrees_add_to_e(g in -4i64..15, gbar in 0i64..4, idx in indices(), k in -5i64..5) {
        let r = RibbonInvariants::new(g, gbar).unwrap();
        let b: i64 = idx.iter().sum();
        let glb = GlbDescriptor::new(b + 2 * k, idx).unwrap();
        let inv = glb.invariants(&r);
        prop_assert_eq!(inv.deg_f1 + inv.deg_ibar, inv.e);
        if classify_glb(&r, &glb) == StabilityVerdict::StrictlySemistable {
            let gr = ribbon_moduli::stability::gr_class(&r, &SheafPoint::Glb(glb)).unwrap();
            prop_assert_eq!(gr, GrClass::SplitClass { deg_f1: inv.e / 2, deg_ibar: inv.e / 2 });
        }
    }

    #[test]
    fn verdict_is_monotone_and_polarization_free(
        g in -4i64..15, gbar in 0i64..4, idx in indices(), k in -5i64..5, deg_l in 1i64..20,
    ) {
        let r = RibbonInvariants::new(g, gbar).unwrap();
        let b: i64 = idx.iter().sum();
        let glb = GlbDescriptor::new(b + 2 * k, idx.clone()).unwrap();
        let verdict = classify_glb(&r, &glb);
        let s = slopes(&r, deg_l, &glb).unwrap();
        prop_assert_eq!(s.verdict(), verdict);
        prop_assert_eq!(s.mu_i * 2, s.mu_ibar + s.mu_f1);
        let mut bigger = idx;
        bigger.push(2);
        let worse = classify_glb(&r, &GlbDescriptor::new(b + 2 * k, bigger).unwrap());
        prop_assert!(worse >= verdict);
    }

    #[test]
    fn moves_lower_dimension_as_labelled(idx in indices(), g in 0i64..20) {
        let mut idx = idx;
        idx.sort_unstable_by(|a, b| b.cmp(a));
        for (next, mv) in specializations_of(&idx) {
            prop_assert_eq!(stratum_dim(g, &idx) - stratum_dim(g, &next), mv.dim_drop());
        }
    }

    #[test]
    fn strata_are_canonical(g in 0i64..10, gbar in 0i64..3, d in 0i64..2) {
        let r = RibbonInvariants::new(g, gbar).unwrap();
        for s in enumerate_strata(&r, d, true) {
            prop_assert!(s.indices.windows(2).all(|w| w[0] >= w[1]));
            prop_assert!(s.dim <= g);
        }
    }

    #[test]
    fn hnf_is_idempotent_and_order_free(gens in prop::collection::vec(eps_poly(), 1..4)) {
        prop_assume!(gens.iter().any(|g| !g.is_zero()));
        let a = EpsIdeal::from_generators(P, &gens).unwrap();
        let again = EpsIdeal::from_generators(P, &a.basis()).unwrap();
        prop_assert_eq!(&again, &a);
        let mut rev = gens.clone();
        rev.reverse();
        prop_assert_eq!(EpsIdeal::from_generators(P, &rev).unwrap(), a.clone());
        for g in &gens {
            prop_assert!(a.contains(g));
        }
    }

    #[test]
    fn twisting_adds_colength_and_keeps_index(a in finite_ideal(), f in eps_poly(), c in 0i64..5) {
        prop_assume!(!f.one.is_zero());
        let principal = EpsIdeal::from_generators(P, std::slice::from_ref(&f)).unwrap();
        let fa = a.mul_element(&f).unwrap();
        prop_assert_eq!(fa.colength().unwrap(), a.colength().unwrap() + principal.colength().unwrap());
        prop_assert_eq!(fa.local_index_at(c).unwrap(), a.local_index_at(c).unwrap());
    }

    #[test]
    fn local_colengths_sum_to_colength(a in finite_ideal()) {
        // Equality needs the support to consist of F_p-points.
        let total: usize = (0..P as i64).map(|c| a.local_colength_at(c).unwrap()).sum();
        let colength = a.colength().unwrap();
        prop_assert!(total <= colength);
        let h = a.one_part();
        let splits = h.degree().unwrap_or(0) == (0..P as i64).map(|c| h.order_at(c).unwrap_or(0)).sum::<usize>();
        if splits {
            prop_assert_eq!(total, colength);
        }
    }

    #[test]
    fn intersection_is_contained_in_both(a in finite_ideal(), b in finite_ideal()) {
        let meet = a.intersect(&b).unwrap();
        for g in meet.basis() {
            prop_assert!(a.contains(&g) && b.contains(&g));
        }
        prop_assert!(meet.colength().unwrap() >= a.colength().unwrap().max(b.colength().unwrap()));
    }
}
