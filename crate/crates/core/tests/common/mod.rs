//! Seeded checks shared by the property suites and the acceptance test. Each
//! check returns the number of assertions it made, or a failure message.

#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qfab::algebra::{build_algebra, FDAlgebra, IdempotentSet, Presentation};
use qfab::fabric::{check_fabric_combinatorial_in, check_fabric_definitional, companion_holds};
use qfab::fixtures;
use qfab::homology::{
    ar_translate, ar_translate_inverse, ext_dims, gen_membership, is_projective, syzygy, Level,
};
use qfab::rep::{is_indecomposable, is_isomorphic, random_module, Representation};

pub type Check = Result<usize, String>;

pub struct Case {
    pub name: String,
    pub presentation: Presentation,
    pub algebra: Arc<FDAlgebra>,
}

pub fn cases() -> &'static [Case] {
    static CASES: OnceLock<Vec<Case>> = OnceLock::new();
    CASES.get_or_init(|| {
        fixtures::all_small()
            .unwrap()
            .into_iter()
            .map(|fx| {
                let algebra = build_algebra(&fx.presentation).unwrap();
                Case { name: fx.name, presentation: fx.presentation, algebra }
            })
            .collect()
    })
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pick(rng: &mut ChaCha8Rng) -> &'static Case {
    let cs = cases();
    &cs[rng.gen_range(0..cs.len())]
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> IdempotentSet {
    IdempotentSet::new((0..n).filter(|_| rng.gen_bool(0.5)))
}

fn module(rng: &mut ChaCha8Rng, a: &Arc<FDAlgebra>) -> Representation {
    random_module(a, rng, 8)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(1)
    } else {
        Err(msg())
    }
}

/// Resolution tops and Ext vanishing give the same verdict on `M ∈ gen_l(Ae)`.
pub fn gen_agreement(seed: u64) -> Check {
    let mut r = rng(seed);
    let c = pick(&mut r);
    let a = &c.algebra;
    let m = module(&mut r, a);
    let e = random_subset(&mut r, a.n_vertices());
    let l = r.gen_range(0..4);
    let rep = gen_membership(&m, &e, Level::Finite(l), 8).map_err(|e| e.to_string())?;
    ensure(rep.by_resolution.is_some() && rep.agree(), || {
        format!("{} seed {seed}: gen_{l} verdicts {:?} / {:?}", c.name, rep.by_resolution, rep.by_ext)
    })
}

/// `dim Ext^i(M, N) = dim Ext^(i-1)(ΩM, N)` for `i >= 2`.
pub fn ext_shift(seed: u64) -> Check {
    let mut r = rng(seed);
    let c = pick(&mut r);
    let a = &c.algebra;
    let m = module(&mut r, a);
    let n = module(&mut r, a);
    let big = ext_dims(&m, &n, 4).map_err(|e| e.to_string())?;
    let small = ext_dims(&syzygy(&m), &n, 3).map_err(|e| e.to_string())?;
    let mut count = 0;
    for i in 2..=4 {
        count += ensure(big[i] == small[i - 1], || {
            format!("{} seed {seed}: Ext^{i} = {} but Ext^{} of the syzygy = {}", c.name, big[i], i - 1, small[i - 1])
        })?;
    }
    Ok(count)
}

fn indecomposable_non_projective(r: &mut ChaCha8Rng, a: &Arc<FDAlgebra>) -> Option<Representation> {
    for _ in 0..24 {
        let m = module(r, a);
        if !m.is_zero() && !is_projective(&m) && matches!(is_indecomposable(&m), Ok(true)) {
            return Some(m);
        }
    }
    (0..a.n_vertices()).map(|v| Representation::simple(a, v)).find(|s| !is_projective(s))
}

/// `τ⁻τM ≅ M` for indecomposable non-projective `M`.
pub fn tau_round_trip(seed: u64) -> Check {
    let mut r = rng(seed);
    let c = pick(&mut r);
    let a = &c.algebra;
    let Some(m) = indecomposable_non_projective(&mut r, a) else {
        return Err(format!("{}: every simple is projective", c.name));
    };
    let back = ar_translate_inverse(&ar_translate(&m));
    let iso = is_isomorphic(&back, &m).map_err(|e| e.to_string())?.is_some();
    ensure(iso, || format!("{} seed {seed}: τ⁻τM ≇ M for {}", c.name, m.describe()))
}

/// The combinatorial and definitional fabric tests agree on random `f`.
pub fn fabric_agreement(seed: u64) -> Check {
    let mut r = rng(seed);
    let c = pick(&mut r);
    let a = &c.algebra;
    let f = random_subset(&mut r, a.n_vertices());
    let def = check_fabric_definitional(a, &f).map_err(|e| e.to_string())?;
    if !def.proj_dim_ok {
        let comb = check_fabric_combinatorial_in(&c.presentation, a, &f);
        return ensure(matches!(comb, Err(qfab::Error::ProjDimTooBig)), || {
            format!("{} seed {seed}: combinatorial test accepted f with proj.dim A/<f> > 1", c.name)
        });
    }
    let comb = check_fabric_combinatorial_in(&c.presentation, a, &f).map_err(|e| e.to_string())?;
    let mut n = ensure(comb.companion == def.strong, || {
        format!(
            "{} seed {seed}: f = {:?}, combinatorial {:?}, definitional {:?}",
            c.name,
            f.labels(a.labels()),
            comb.companion.as_ref().map(|e| e.labels(a.labels())),
            def.strong.as_ref().map(|e| e.labels(a.labels()))
        )
    })?;
    if let Some(e) = &def.strong {
        n += ensure(companion_holds(a, &f, &def.tau, e).map_err(|e| e.to_string())?, || {
            format!("{} seed {seed}: strong companion fails the definition", c.name)
        })?;
        n += ensure(def.companion.as_ref() == Some(e), || format!("{} seed {seed}: companion differs", c.name))?;
    }
    Ok(n)
}

/// `rad(eAe) e_v ≅ e rad(A) e_v` as `eAe`-modules for each `v ∈ e`.
pub fn corner_radical(seed: u64) -> Check {
    let mut r = rng(seed);
    let c = pick(&mut r);
    let a = &c.algebra;
    let mut e = random_subset(&mut r, a.n_vertices());
    if e.is_empty() {
        e = IdempotentSet::new([r.gen_range(0..a.n_vertices())]);
    }
    let b = a.corner(&e).map_err(|e| e.to_string())?;
    let mut count = 0;
    for v in e.iter() {
        let bv = b.vertex_by_label(a.label(v)).map_err(|e| e.to_string())?;
        let rad_b = Representation::projective(&b, bv).radical().0;
        let rad_a = Representation::projective(a, v).radical().0;
        let restricted = rad_a.restrict_to_corner(&b).map_err(|e| e.to_string())?;
        let iso = is_isomorphic(&restricted, &rad_b).map_err(|e| e.to_string())?.is_some();
        count += ensure(iso, || format!("{} seed {seed}: e = {:?}, vertex {}", c.name, e.labels(a.labels()), a.label(v)))?;
    }
    Ok(count)
}

/// Runs `check` on seeds `0..n`, returning the total number of assertions.
pub fn run(check: fn(u64) -> Check, n: u64) -> Check {
    let mut total = 0;
    for s in 0..n {
        total += check(s)?;
    }
    Ok(total)
}
