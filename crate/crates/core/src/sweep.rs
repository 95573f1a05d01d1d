//! The full verification grid behind `verify sweep`.
//!
//! Each item draws its random parameters from its own generator, seeded from
//! the sweep seed and the item's position, so results do not depend on how
//! items are scheduled across threads.

use std::thread;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::local::{
    endo_quotient_dim, ext1_dim, standard_ideal, verify_deformation_i, verify_deformation_ii,
    EpsPoly, Poly,
};
use crate::moduli::{
    component_table, enumerate_strata, glb_component_count, smoothness_verdict,
    stratification_graph, stratum_dim, tangent_dim_vb, NodeKind, Smoothness,
};
use crate::report::Check;
use crate::ribbon::{GlbDescriptor, RibbonInvariants, VbDescriptor};
use crate::stability::{classify_glb, slopes, SheafPoint, StabilityVerdict};

pub const SEED_VAR: &str = "RIBBON_MODULI_SEED";
pub const DEFAULT_SEED: u64 = 20_240_917;
pub const PRIMES: [u64; 2] = [5, 101];

/// Seed from `RIBBON_MODULI_SEED`, falling back to a fixed default.
pub fn seed_from_env() -> u64 {
    std::env::var(SEED_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// A nonzero element of `F_p`.
pub fn random_unit(rng: &mut impl Rng, p: u64) -> i64 {
    rng.gen_range(1..p) as i64
}

/// `(g, gbar, d)` with `g ∈ [0, 12]`, `gbar ∈ [0, 3]`, `d ∈ {0, 1}`.
pub fn grid() -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for g in 0..=12 {
        for gbar in 0..=3 {
            for d in 0..=1 {
                out.push((g, gbar, d));
            }
        }
    }
    out
}

fn ribbon(g: i64, gbar: i64) -> RibbonInvariants {
    RibbonInvariants::new(g, gbar).expect("grid genera are valid")
}

fn summarize(name: &str, total: usize, failures: Vec<String>) -> Check {
    let detail = match failures.first() {
        None => format!("{total} cases"),
        Some(first) => format!("{} of {total} cases failed; first: {first}", failures.len()),
    };
    Check::new(name, failures.is_empty(), detail)
}

pub fn component_counts(_seed: u64) -> Check {
    let mut total = 0;
    let mut failures = Vec::new();
    for (g, gbar, d) in grid().into_iter().filter(|&(g, gbar, _)| g > 2 * gbar - 1) {
        total += 1;
        let r = ribbon(g, gbar);
        let got = component_table(&r, d).glb_components.len() as i64;
        let want = glb_component_count(&r, d);
        if got != want {
            failures.push(format!("({g},{gbar},{d}): {got} vs {want}"));
        }
    }
    summarize("component-counts", total, failures)
}

pub fn stratum_dims(_seed: u64) -> Check {
    let mut total = 0;
    let mut failures = Vec::new();
    for (g, gbar, d) in grid().into_iter().filter(|&(g, gbar, _)| g > 2 * gbar - 1) {
        for s in enumerate_strata(&ribbon(g, gbar), d, false) {
            total += 1;
            let all_ones = s.indices.iter().all(|&b| b == 1);
            if s.dim != stratum_dim(g, &s.indices)
                || (d - s.index()).rem_euclid(2) != 0
                || (s.dim == g) != all_ones
            {
                failures.push(format!("({g},{gbar},{d}) {}", s.label()));
            }
        }
    }
    summarize("stratum-dims", total, failures)
}

pub fn connectivity(_seed: u64) -> Check {
    let mut total = 0;
    let mut failures = Vec::new();
    for (g, gbar, d) in grid() {
        let graph = stratification_graph(&ribbon(g, gbar), d);
        if graph.is_empty() {
            continue;
        }
        total += 1;
        if !graph.is_connected() {
            failures.push(format!("({g},{gbar},{d})"));
        }
    }
    summarize("connectivity", total, failures)
}

pub fn rational_boundary(_seed: u64) -> Check {
    let mut failures = Vec::new();
    for g in 0..=12 {
        let graph = stratification_graph(&ribbon(g, 0), 0);
        let boundary: Vec<_> = graph.boundary_nodes().collect();
        let ok = if g % 2 == 1 {
            boundary.len() == 1 && matches!(boundary[0].kind, NodeKind::Boundary { .. })
        } else {
            boundary.is_empty()
        };
        if !ok {
            failures.push(format!("g={g}: {} boundary nodes", boundary.len()));
        }
    }
    summarize("rational-boundary", 13, failures)
}

pub fn ext_oracle(_seed: u64) -> Check {
    let mut total = 0;
    let mut failures = Vec::new();
    for n in 0..=5usize {
        for p in PRIMES {
            for trunc in [4 * n + 4, 4 * n + 6] {
                total += 1;
                let ext = ext1_dim(n, p, trunc);
                let endo = endo_quotient_dim(n, p, trunc);
                if ext != Ok(2 * n) || endo != Ok(n) {
                    failures.push(format!("n={n} p={p} T={trunc}: ext {ext:?}, endo {endo:?}"));
                }
            }
        }
    }
    summarize("ext-oracle", total, failures)
}

pub fn deformation_one(seed: u64) -> Check {
    let mut rng = rng_for(seed, 6);
    let mut total = 0;
    let mut failures = Vec::new();
    for b0 in 0..=4 {
        for p in PRIMES {
            for _ in 0..3 {
                total += 1;
                let t = random_unit(&mut rng, p);
                match verify_deformation_i(b0, p, t) {
                    Ok(r) if r.passed() => {}
                    Ok(r) => failures.push(format!(
                        "b0={b0} p={p} t={t}: {}",
                        r.failures()
                            .map(|c| c.name.as_str())
                            .collect::<Vec<_>>()
                            .join(",")
                    )),
                    Err(e) => failures.push(format!("b0={b0} p={p} t={t}: {e}")),
                }
            }
        }
    }
    summarize("deformation-i", total, failures)
}

pub fn deformation_two(seed: u64) -> Check {
    let mut rng = rng_for(seed, 7);
    let mut total = 0;
    let mut failures = Vec::new();
    for b1 in 1..=4 {
        for p in PRIMES {
            for _ in 0..3 {
                total += 1;
                let t = random_unit(&mut rng, p);
                match verify_deformation_ii(b1, p, t) {
                    Ok(r) if r.passed() => {}
                    Ok(r) => failures.push(format!(
                        "b1={b1} p={p} t={t}: {}",
                        r.failures()
                            .map(|c| c.name.as_str())
                            .collect::<Vec<_>>()
                            .join(",")
                    )),
                    Err(e) => failures.push(format!("b1={b1} p={p} t={t}: {e}")),
                }
            }
        }
    }
    summarize("deformation-ii", total, failures)
}

/// A random element of `R` with nonzero 1-part, i.e. a non-zerodivisor.
pub fn random_non_zerodivisor(rng: &mut impl Rng, p: u64) -> EpsPoly {
    let mut coeffs =
        |len: usize| -> Vec<i64> { (0..len).map(|_| rng.gen_range(0..p) as i64).collect() };
    loop {
        let one = Poly::from_coeffs(p, &coeffs(4));
        if one.is_zero() {
            continue;
        }
        let eps = Poly::from_coeffs(p, &coeffs(4));
        return EpsPoly::new(one, eps);
    }
}

pub fn local_index_twists(seed: u64) -> Check {
    let mut rng = rng_for(seed, 8);
    let p = 101;
    let mut total = 0;
    let mut failures = Vec::new();
    for n in 0..=4usize {
        let model = standard_ideal(p, n).expect("model ideal");
        total += 1;
        let endo = endo_quotient_dim(n, p, 2 * n + 2);
        if model.local_index_at(0) != Ok(n) || endo != Ok(n) {
            failures.push(format!(
                "n={n}: model {:?}, endo {endo:?}",
                model.local_index_at(0)
            ));
        }
        for _ in 0..20 {
            total += 1;
            let f = random_non_zerodivisor(&mut rng, p);
            let got = model.mul_element(&f).and_then(|i| i.local_index_at(0));
            if got != Ok(n) {
                failures.push(format!("n={n} f={f}: {got:?}"));
            }
        }
    }
    summarize("local-index-twists", total, failures)
}

pub fn tangent_smoothness(_seed: u64) -> Check {
    let mut total = 0;
    let mut failures = Vec::new();
    for g in [6, 8, 10] {
        let r = ribbon(g, 2);
        total += 1;
        if tangent_dim_vb(&r, None) != Ok(Some(4 * g + 5 - 16)) {
            failures.push(format!("g={g}: tangent_dim_vb"));
        }
        for d in 0..=1 {
            for s in enumerate_strata(&r, d, false) {
                total += 1;
                let glb = GlbDescriptor::new(d, s.indices.iter().copied()).expect("stratum");
                let verdict = smoothness_verdict(&r, d, &SheafPoint::Glb(glb));
                let smooth = verdict == Ok(Smoothness::Smooth);
                if smooth != s.is_line_bundle_locus() {
                    failures.push(format!("g={g} d={d} {}: {verdict:?}", s.label()));
                }
            }
            total += 1;
            let vb = VbDescriptor::with_status(r.vb_degree(d), Some(StabilityVerdict::Stable));
            if smoothness_verdict(&r, d, &SheafPoint::Vb(vb)) == Ok(Smoothness::Smooth) {
                failures.push(format!("g={g} d={d}: stable bundle marked smooth"));
            }
        }
    }
    summarize("tangent-smoothness", total, failures)
}

/// A random index multiset paired with a degree of matching parity.
pub fn random_descriptor(rng: &mut impl Rng, max_part: i64) -> GlbDescriptor {
    let len = rng.gen_range(0..=4);
    let mut parts: Vec<i64> = (0..len).map(|_| rng.gen_range(1..=max_part)).collect();
    parts.shuffle(rng);
    let b: i64 = parts.iter().sum();
    let d = b + 2 * rng.gen_range(-6..=6);
    GlbDescriptor::new(d, parts).expect("parity holds by construction")
}

pub fn slope_coherence(seed: u64) -> Check {
    let mut rng = rng_for(seed, 10);
    let mut total = 0;
    let mut failures = Vec::new();
    for (g, gbar, _) in grid() {
        let r = ribbon(g, gbar);
        for _ in 0..500 {
            let glb = random_descriptor(&mut rng, g + 3);
            let verdict = classify_glb(&r, &glb);
            for deg_l in [1, 2, 7] {
                total += 1;
                let s = slopes(&r, deg_l, &glb).expect("positive polarization");
                if s.verdict() != verdict {
                    failures.push(format!("({g},{gbar}) {glb} degL={deg_l}"));
                }
            }
        }
    }
    summarize("slope-coherence", total, failures)
}

pub type Criterion = fn(u64) -> Check;

/// The ten grid checks, in order.
pub const CRITERIA: [Criterion; 10] = [
    component_counts,
    stratum_dims,
    connectivity,
    rational_boundary,
    ext_oracle,
    deformation_one,
    deformation_two,
    local_index_twists,
    tangent_smoothness,
    slope_coherence,
];

/// Runs every criterion, spread over up to `threads` workers.
pub fn run_sweep(seed: u64, threads: usize) -> Vec<Check> {
    let threads = threads.clamp(1, CRITERIA.len());
    let mut results: Vec<Option<Check>> = vec![None; CRITERIA.len()];
    thread::scope(|scope| {
        let chunks = results.chunks_mut(CRITERIA.len().div_ceil(threads));
        for (chunk_idx, chunk) in chunks.enumerate() {
            let offset = chunk_idx * CRITERIA.len().div_ceil(threads);
            scope.spawn(move || {
                for (i, slot) in chunk.iter_mut().enumerate() {
                    *slot = Some(CRITERIA[offset + i](seed));
                }
            });
        }
    });
    results
        .into_iter()
        .map(|c| c.expect("every slot is filled"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_shape() {
        assert_eq!(grid().len(), 13 * 4 * 2);
    }

    #[test]
    fn cheap_criteria_pass() {
        for c in [
            component_counts,
            stratum_dims,
            rational_boundary,
            tangent_smoothness,
        ] {
            let check = c(DEFAULT_SEED);
            assert!(check.pass, "{check:?}");
        }
    }

    #[test]
    fn random_descriptors_are_valid() {
        let mut rng = rng_for(1, 0);
        for _ in 0..100 {
            let glb = random_descriptor(&mut rng, 5);
            assert_eq!((glb.degree() - glb.index()).rem_euclid(2), 0);
        }
    }
}
