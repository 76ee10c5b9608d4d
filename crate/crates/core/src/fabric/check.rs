use std::sync::Arc;

use crate::algebra::{build_algebra, FDAlgebra, IdempotentSet, PathWord, Presentation};
use crate::error::{Error, Result};
use crate::homology::{
    ar_translate, ar_translate_inverse, is_injective, is_projective, minimal_resolution_with, Direction,
    ResolveOptions,
};
use crate::linalg::sparse::SparseVec;
use crate::linalg::Scalar;
use crate::rep::{is_isomorphic, Representation};

/// Largest vertex count for which every vertex subset is tried as a companion.
pub const EXHAUSTIVE_CAP: usize = 16;

/// The indecomposable projective `A/<f>`-modules `Ae_v/<f>`, `v ∉ f`, as `A`-modules.
pub fn quotient_projectives(a: &Arc<FDAlgebra>, f: &IdempotentSet) -> Result<Vec<(usize, Representation)>> {
    let comp = f.complement(a.n_vertices());
    if comp.is_empty() {
        return Ok(Vec::new());
    }
    let q = a.quotient(f)?;
    comp.iter()
        .enumerate()
        .map(|(i, v)| Ok((v, Representation::projective(&q, i).inflate()?)))
        .collect()
}

/// The indecomposable injective `A/<e>`-modules, as `A`-modules.
pub fn quotient_injectives(a: &Arc<FDAlgebra>, e: &IdempotentSet) -> Result<Vec<(usize, Representation)>> {
    let comp = e.complement(a.n_vertices());
    if comp.is_empty() {
        return Ok(Vec::new());
    }
    let q = a.quotient(e)?;
    comp.iter()
        .enumerate()
        .map(|(i, v)| Ok((v, Representation::injective(&q, i).inflate()?)))
        .collect()
}

/// `proj.dim_A(A/<f>) <= 1`.
pub fn quotient_proj_dim_at_most_one(a: &Arc<FDAlgebra>, f: &IdempotentSet) -> Result<bool> {
    for (_, q) in quotient_projectives(a, f)? {
        let res = minimal_resolution_with(&q, Direction::Projective, ResolveOptions { terms: 2, detect_period: false });
        if res.syzygies.get(2).is_some_and(|s| !s.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn over_quotient(a: &Arc<FDAlgebra>, killed: &IdempotentSet, m: &Representation) -> Result<Option<Representation>> {
    if killed.iter().any(|v| m.dim_at(v) > 0) {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(m.clone()));
    }
    let q = a.quotient(killed)?;
    Ok(Some(m.deflate(&q)?))
}

/// `M` is a projective `A/<f>`-module.
pub fn is_projective_over_quotient(a: &Arc<FDAlgebra>, f: &IdempotentSet, m: &Representation) -> Result<bool> {
    Ok(match over_quotient(a, f, m)? {
        Some(d) => d.is_zero() || is_projective(&d),
        None => false,
    })
}

/// `M` is an injective `A/<e>`-module.
pub fn is_injective_over_quotient(a: &Arc<FDAlgebra>, e: &IdempotentSet, m: &Representation) -> Result<bool> {
    Ok(match over_quotient(a, e, m)? {
        Some(d) => d.is_zero() || is_injective(&d),
        None => false,
    })
}

/// How a companion idempotent was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompanionSearch {
    /// The projective dimension condition failed; no search was made.
    NotRun,
    /// The complement of the socles of the translates, with
    /// `⊕ τ(Ae_v/<f>) ≅ D(A/<e>)`.
    Socle,
    /// The candidate built from the supports of the translates.
    Constructive,
    /// Exhaustive search over vertex subsets; `tried` candidates examined.
    Exhaustive { tried: usize },
    /// The constructive candidate failed and the algebra is too large for exhaustion.
    Abandoned,
}

/// Outcome of the definitional fabric test.
#[derive(Clone, Debug)]
pub struct DefinitionalCheck {
    pub f: IdempotentSet,
    pub proj_dim_ok: bool,
    /// `τ(Ae_v/<f>)` for every `v ∉ f`.
    pub tau: Vec<(usize, Representation)>,
    /// Vertices in the support of some translate; a companion avoids them.
    pub tau_support: IdempotentSet,
    /// `e` with `τ(A/<f>) ≅ D(A/<e>)` as modules, if there is one.
    pub strong: Option<IdempotentSet>,
    pub companion: Option<IdempotentSet>,
    pub search: CompanionSearch,
}

impl DefinitionalCheck {
    pub fn is_fabric(&self) -> bool {
        self.companion.is_some()
    }
}

/// Both conditions on a candidate companion `e`: every `τ(P)` is an injective
/// `A/<e>`-module and every `τ⁻(I)` a projective `A/<f>`-module.
pub fn companion_holds(
    a: &Arc<FDAlgebra>,
    f: &IdempotentSet,
    tau: &[(usize, Representation)],
    e: &IdempotentSet,
) -> Result<bool> {
    for (_, t) in tau {
        if !is_injective_over_quotient(a, e, t)? {
            return Ok(false);
        }
    }
    for (_, i) in quotient_injectives(a, e)? {
        let t = ar_translate_inverse(&i);
        if !is_projective_over_quotient(a, f, &t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The `e` for which `⊕_v τ(Ae_v/<f>)` is isomorphic to the sum of the
/// indecomposable injective `A/<e>`-modules. Each nonzero translate must have a
/// simple socle; `e` is the complement of those socles.
pub fn strong_companion(a: &Arc<FDAlgebra>, tau: &[(usize, Representation)]) -> Result<Option<IdempotentSet>> {
    let mut socles = Vec::new();
    let mut nonzero = Vec::new();
    for (_, t) in tau.iter().filter(|(_, t)| !t.is_zero()) {
        let s = t.socle_vector();
        if s.iter().sum::<usize>() != 1 {
            return Ok(None);
        }
        socles.push(s.iter().position(|&x| x == 1).unwrap());
        nonzero.push(t.clone());
    }
    let mut distinct = socles.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != socles.len() {
        return Ok(None);
    }
    let e = IdempotentSet::new(socles).complement(a.n_vertices());
    let injectives: Vec<Representation> = quotient_injectives(a, &e)?.into_iter().map(|(_, i)| i).collect();
    if injectives.len() != nonzero.len() {
        return Ok(None);
    }
    if nonzero.is_empty() {
        return Ok(Some(e));
    }
    let lhs = Representation::direct_sum(a, &injectives).0;
    let rhs = Representation::direct_sum(a, &nonzero).0;
    Ok(is_isomorphic(&lhs, &rhs)?.map(|_| e))
}

/// Tests `f` against the definition: `proj.dim A/<f> <= 1` and a companion `e`
/// with `τ(proj A/<f>) ⊆ inj A/<e>` and `τ⁻(inj A/<e>) ⊆ proj A/<f>`.
pub fn check_fabric_definitional(a: &Arc<FDAlgebra>, f: &IdempotentSet) -> Result<DefinitionalCheck> {
    a.check_idempotent(f)?;
    let n = a.n_vertices();
    let mut out = DefinitionalCheck {
        f: f.clone(),
        proj_dim_ok: false,
        tau: Vec::new(),
        tau_support: IdempotentSet::default(),
        strong: None,
        companion: None,
        search: CompanionSearch::NotRun,
    };
    if !quotient_proj_dim_at_most_one(a, f)? {
        return Ok(out);
    }
    out.proj_dim_ok = true;
    out.tau = quotient_projectives(a, f)?
        .into_iter()
        .map(|(v, q)| (v, ar_translate(&q)))
        .collect();
    let support: IdempotentSet = IdempotentSet::new(out.tau.iter().flat_map(|(_, t)| t.support().to_vec()));
    out.tau_support = support.clone();
    out.strong = strong_companion(a, &out.tau)?;
    if let Some(e) = &out.strong {
        if companion_holds(a, f, &out.tau, e)? {
            out.companion = Some(e.clone());
            out.search = CompanionSearch::Socle;
            return Ok(out);
        }
    }
    let candidate = support.complement(n);
    if companion_holds(a, f, &out.tau, &candidate)? {
        out.companion = Some(candidate);
        out.search = CompanionSearch::Constructive;
        return Ok(out);
    }
    if n > EXHAUSTIVE_CAP {
        out.search = CompanionSearch::Abandoned;
        return Ok(out);
    }
    // subsets of the candidate, larger ones first
    let free = candidate.to_vec();
    let mut masks: Vec<u32> = (0..(1u32 << free.len()) - 1).collect();
    masks.sort_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
    let mut tried = 1;
    for m in masks {
        tried += 1;
        let e = IdempotentSet::new(free.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &v)| v));
        if companion_holds(a, f, &out.tau, &e)? {
            out.companion = Some(e);
            break;
        }
    }
    out.search = CompanionSearch::Exhaustive { tried };
    Ok(out)
}

/// A failed condition of the combinatorial test with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionFailure {
    pub condition: u8,
    pub witness: String,
}

/// Outcome of the combinatorial (quiver and relations) fabric test.
#[derive(Clone, Debug)]
pub struct CombinatorialCheck {
    pub f: IdempotentSet,
    /// `i -> i'` for the vertices `i ∉ f` with an arrow into `f`.
    pub primes: Vec<(usize, usize)>,
    pub companion: Option<IdempotentSet>,
    pub failure: Option<ConditionFailure>,
    /// Products equal up to a scalar other than one.
    pub near_misses: Vec<String>,
    pub transcript: Vec<String>,
}

impl CombinatorialCheck {
    pub fn is_fabric(&self) -> bool {
        self.companion.is_some()
    }
}

fn arrow_elements(p: &Presentation, a: &FDAlgebra) -> Result<Vec<usize>> {
    let q = &p.quiver;
    (0..q.n_arrows())
        .map(|k| {
            let w = PathWord::arrow(q, k);
            a.basis()
                .iter()
                .position(|b| b.path.as_ref() == Some(&w))
                .ok_or_else(|| Error::NotAdmissible(format!("arrow {} is not a basis element", q.arrow(k).name)))
        })
        .collect()
}

/// `x = c y` for a scalar `c`.
fn proportional(x: &SparseVec, y: &SparseVec) -> Option<Scalar> {
    if x.len() != y.len() || x.is_empty() {
        return None;
    }
    let mut ratio: Option<Scalar> = None;
    for ((i, a), (j, b)) in x.iter().zip(y) {
        if i != j {
            return None;
        }
        let r = a.div_ref(b)?;
        match &ratio {
            Some(c) if *c != r => return None,
            Some(_) => {}
            None => ratio = Some(r),
        }
    }
    ratio
}

/// The combinatorial test on a presentation, building the algebra first.
pub fn check_fabric_combinatorial(p: &Presentation, f: &IdempotentSet) -> Result<CombinatorialCheck> {
    let a = build_algebra(p)?;
    check_fabric_combinatorial_in(p, &a, f)
}

/// The combinatorial test on a presentation and the algebra built from it.
///
/// Paths are compared through the normal forms of the algebra. The companion
/// is the set of vertices not of the form `i'`; condition (2) asks that every
/// arrow into some `j'` other than `α_j` starts at a vertex `i'`.
pub fn check_fabric_combinatorial_in(
    p: &Presentation,
    a: &Arc<FDAlgebra>,
    f: &IdempotentSet,
) -> Result<CombinatorialCheck> {
    a.check_idempotent(f)?;
    if !quotient_proj_dim_at_most_one(a, f)? {
        return Err(Error::ProjDimTooBig);
    }
    let q = &p.quiver;
    let n = q.n_vertices();
    let arrow_el = arrow_elements(p, a)?;
    let label = |v: usize| q.vertices()[v].clone();
    let name = |k: usize| q.arrow(k).name.clone();
    let mut out = CombinatorialCheck {
        f: f.clone(),
        primes: Vec::new(),
        companion: None,
        failure: None,
        near_misses: Vec::new(),
        transcript: Vec::new(),
    };
    let fail = |out: &mut CombinatorialCheck, condition: u8, witness: String| {
        out.transcript.push(format!("condition ({condition}) fails: {witness}"));
        out.failure = Some(ConditionFailure { condition, witness });
    };

    // (1)
    let mut alpha: Vec<Option<usize>> = vec![None; n];
    for i in f.complement(n).iter() {
        let into_f: Vec<usize> = q.arrows_from(i).filter(|&k| f.contains(q.arrow(k).target)).collect();
        match into_f.len() {
            0 => {}
            1 => alpha[i] = Some(into_f[0]),
            _ => {
                let names: Vec<String> = into_f.iter().map(|&k| name(k)).collect();
                fail(&mut out, 1, format!("vertex {} has arrows {} into f", label(i), names.join(", ")));
                return Ok(out);
            }
        }
    }
    let prime = |i: usize| alpha[i].map(|k| q.arrow(k).target);
    out.primes = (0..n).filter_map(|i| prime(i).map(|t| (i, t))).collect();
    out.transcript.push(format!(
        "condition (1) holds; primes: {}",
        out.primes.iter().map(|(i, t)| format!("{}->{}", label(*i), label(*t))).collect::<Vec<_>>().join(" ")
    ));
    let is_prime: Vec<bool> = (0..n).map(|v| out.primes.iter().any(|&(_, t)| t == v)).collect();

    let e = IdempotentSet::new((0..n).filter(|&v| !is_prime[v]));
    out.transcript.push(format!("candidate e = {{{}}}", e.labels(q.vertices()).join(",")));

    // (2)
    for &(j, jp) in &out.primes {
        for d in q.arrows_to(jp) {
            let s = q.arrow(d).source;
            if s == j {
                continue;
            }
            if e.contains(s) {
                fail(&mut out, 2, format!("arrow {} from {} into {}", name(d), label(s), label(jp)));
                return Ok(out);
            }
        }
    }

    let comp = f.complement(n);
    // (3)
    for &(j, jp) in &out.primes {
        let aj = a.unit(arrow_el[alpha[j].unwrap()]);
        for i in comp.iter() {
            for b in q.arrows_from(i).filter(|&b| q.arrow(b).target == j) {
                let x = a.mul(&aj, &a.unit(arrow_el[b]));
                if x.is_empty() {
                    continue;
                }
                let mut found = false;
                if let (Some(ai), Some(ip)) = (alpha[i], prime(i)) {
                    let ai = a.unit(arrow_el[ai]);
                    for d in q.arrows_from(ip).filter(|&d| q.arrow(d).target == jp) {
                        let y = a.mul(&a.unit(arrow_el[d]), &ai);
                        if y == x {
                            found = true;
                            break;
                        }
                        if let Some(c) = proportional(&y, &x) {
                            out.near_misses.push(format!("{}*alpha_{} = {c} * alpha_{}*{}", name(d), label(i), label(j), name(b)));
                        }
                    }
                }
                if !found {
                    fail(&mut out, 3, format!("alpha_{}*{} has no matching square", label(j), name(b)));
                    return Ok(out);
                }
            }
        }
    }

    // (4)
    for &(i, ip) in &out.primes {
        let ai = a.unit(arrow_el[alpha[i].unwrap()]);
        for &(j, jp) in &out.primes {
            for d in q.arrows_from(ip).filter(|&d| q.arrow(d).target == jp) {
                let y = a.mul(&a.unit(arrow_el[d]), &ai);
                if y.is_empty() {
                    continue;
                }
                let aj = a.unit(arrow_el[alpha[j].unwrap()]);
                let mut found = false;
                for b in q.arrows_from(i).filter(|&b| q.arrow(b).target == j) {
                    let x = a.mul(&aj, &a.unit(arrow_el[b]));
                    if x == y {
                        found = true;
                        break;
                    }
                    if let Some(c) = proportional(&x, &y) {
                        out.near_misses.push(format!("alpha_{}*{} = {c} * {}*alpha_{}", label(j), name(b), name(d), label(i)));
                    }
                }
                if !found {
                    fail(&mut out, 4, format!("{}*alpha_{} has no matching square", name(d), label(i)));
                    return Ok(out);
                }
            }
        }
    }
    out.transcript.push("conditions (2)-(4) hold".into());
    out.companion = Some(e);
    Ok(out)
}
