//! Boundary rings and the ring-level Krull and Heitmann deciders.

use super::{distinct_powers, FiniteRing, RingOracle};
use crate::dimension::{DimensionVerdict, Outcome, Witness};
use crate::error::{Error, Result};
use crate::fault::{self, Fault};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

/// Bounds for searches over infinite rings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingBudget {
    /// Largest exponent `m_i` tried.
    pub exp: u32,
    /// Size bound on multipliers `a_i` (see `RingOracle::search_space`).
    pub coeff: u32,
    /// Random tuples drawn on top of the deterministic probes.
    pub samples: usize,
    pub seed: u64,
    /// Keep one witness per tuple in the verdict.
    pub witnesses: bool,
}

impl Default for RingBudget {
    fn default() -> Self {
        RingBudget { exp: 6, coeff: 4, samples: 50, seed: 0x5eed, witnesses: false }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingStrategy {
    /// Search for the collapse identity on each tuple.
    Witness,
    /// Recursion through the quotients `A/K_A(x)`.
    Upper,
    /// Recursion through the localizations at `x^ℕ(1 + xA)`; finite rings only.
    Lower,
}

impl std::str::FromStr for RingStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "witness" | "global" | "global-2c" | "2c" => Ok(RingStrategy::Witness),
            "upper" | "upper-2a" | "2a" => Ok(RingStrategy::Upper),
            "lower" | "lower-2b" | "2b" => Ok(RingStrategy::Lower),
            _ => Err(Error::Invalid(format!("unknown strategy `{s}`"))),
        }
    }
}

/// Tuples above this count are sampled rather than enumerated.
const TUPLE_LIMIT: usize = 200_000;

/// `x_0^{m_0}(x_1^{m_1}(⋯(x_ℓ^{m_ℓ}(y + a_ℓx_ℓ) + ⋯) + a_1x_1) + a_0x_0)`.
pub fn collapse_value<R: RingOracle>(r: &R, xs: &[R::El], y: &R::El, a: &[R::El], m: &[u32]) -> R::El {
    let mut v = y.clone();
    for i in (0..xs.len()).rev() {
        let t = r.add(&v, &r.mul(&a[i], &xs[i]));
        v = r.mul(&r.pow(&xs[i], m[i]), &t);
    }
    v
}

/// Checks the collapse identity with `y = 1`.
pub fn verify_collapse<R: RingOracle>(r: &R, xs: &[R::El], a: &[R::El], m: &[u32]) -> Result<bool> {
    if xs.len() != a.len() || xs.len() != m.len() {
        return Err(Error::Invalid(format!("lengths differ: {} xs, {} as, {} ms", xs.len(), a.len(), m.len())));
    }
    if fault::active(Fault::VerifyCollapse) {
        return Ok(true);
    }
    Ok(r.is_zero(&collapse_value(r, xs, &r.one(), a, m)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CollapseSearch<E> {
    Found(Vec<E>, Vec<u32>),
    /// Proven impossible: by exhaustion or by an instance argument.
    Refuted,
    Unknown,
}

/// Looks for `a, m` with `collapse_value(xs, y, a, m) = 0`. Finite rings are
/// searched exactly by propagating reachable values from the inside out;
/// otherwise the instance construction is tried, then a bounded search.
pub fn search_collapse<R: RingOracle>(r: &R, xs: &[R::El], y: &R::El, budget: &RingBudget) -> CollapseSearch<R::El> {
    if let Some(all) = r.enumerate() {
        return match collapse_dp(r, &all, xs, y) {
            Some((a, m)) => CollapseSearch::Found(a, m),
            None => CollapseSearch::Refuted,
        };
    }
    let is_one = *y == r.one();
    let accept = |a: &[R::El], m: &[u32]| {
        if is_one {
            verify_collapse(r, xs, a, m).unwrap_or(false)
        } else {
            r.is_zero(&collapse_value(r, xs, y, a, m))
        }
    };
    if is_one {
        if let Some((a, m)) = r.collapse_witness(xs) {
            if accept(&a, &m) {
                return CollapseSearch::Found(a, m);
            }
        }
    }
    let space = r.search_space(budget.coeff);
    let per_slot: Vec<(usize, u32)> = (0..space.len()).flat_map(|i| (0..=budget.exp).map(move |e| (i, e))).collect();
    let mut idx = vec![0usize; xs.len()];
    if !per_slot.is_empty() {
        loop {
            let a: Vec<R::El> = idx.iter().map(|&k| space[per_slot[k].0].clone()).collect();
            let m: Vec<u32> = idx.iter().map(|&k| per_slot[k].1).collect();
            if accept(&a, &m) {
                return CollapseSearch::Found(a, m);
            }
            if !advance(&mut idx, per_slot.len()) {
                break;
            }
        }
    }
    if is_one && r.refute_collapse(xs) {
        return CollapseSearch::Refuted;
    }
    CollapseSearch::Unknown
}

fn advance(idx: &mut [usize], base: usize) -> bool {
    for k in idx.iter_mut().rev() {
        *k += 1;
        if *k < base {
            return true;
        }
        *k = 0;
    }
    false
}

type Step<E> = (E, E, u32);

fn collapse_dp<R: RingOracle>(r: &R, all: &[R::El], xs: &[R::El], y: &R::El) -> Option<(Vec<R::El>, Vec<u32>)> {
    let n = xs.len();
    // levels[i] maps each reachable v_i to the (v_{i+1}, a_i, m_i) producing it.
    let mut levels: Vec<HashMap<R::El, Step<R::El>>> = vec![HashMap::new(); n];
    let mut frontier = vec![y.clone()];
    for i in (0..n).rev() {
        let pows = distinct_powers(r, &xs[i]);
        let mut next = Vec::new();
        for v in &frontier {
            for a in all {
                let t = r.add(v, &r.mul(a, &xs[i]));
                for (p, m) in &pows {
                    let w = r.mul(p, &t);
                    if !levels[i].contains_key(&w) {
                        levels[i].insert(w.clone(), (v.clone(), a.clone(), *m));
                        next.push(w);
                    }
                }
            }
        }
        frontier = next;
    }
    if n == 0 {
        return if r.is_zero(y) { Some((Vec::new(), Vec::new())) } else { None };
    }
    let mut v = r.zero();
    levels[0].get(&v)?;
    let mut a = Vec::with_capacity(n);
    let mut m = Vec::with_capacity(n);
    for level in levels.iter() {
        let (prev, ai, mi) = level[&v].clone();
        a.push(ai);
        m.push(mi);
        v = prev;
    }
    Some((a, m))
}

/// Elements a universally quantified search ranges over, and whether that
/// range is the whole carrier.
fn element_source<R: RingOracle>(r: &R, budget: &RingBudget, rng: &mut ChaCha8Rng) -> (Vec<R::El>, bool) {
    if let Some(all) = r.enumerate() {
        return (all, true);
    }
    let mut v = r.probes();
    for _ in 0..budget.samples {
        let x = r.sample(rng);
        if !v.contains(&x) {
            v.push(x);
        }
    }
    (v, false)
}

fn tuple_source<R: RingOracle>(r: &R, len: usize, budget: &RingBudget) -> (Vec<Vec<R::El>>, bool) {
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    if let Some(all) = r.enumerate() {
        let count = (all.len() as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
        if count <= TUPLE_LIMIT as u128 {
            return (cartesian(&all, len), true);
        }
    }
    let probes = r.probes();
    let mut tuples = if (probes.len() as u128).pow(len as u32) <= 4096 { cartesian(&probes, len) } else { Vec::new() };
    for _ in 0..budget.samples {
        tuples.push((0..len).map(|_| r.sample(&mut rng)).collect());
    }
    (tuples, false)
}

fn cartesian<E: Clone>(items: &[E], len: usize) -> Vec<Vec<E>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| items.iter().map(move |x| {
                let mut u = t.clone();
                u.push(x.clone());
                u
            }))
            .collect();
    }
    out
}

fn base_cases<E>(trivial: bool, l: i64) -> Option<DimensionVerdict<E>> {
    if l < -1 {
        return Some(DimensionVerdict::new(l, Outcome::Fails).with_note("every dimension is at least -1"));
    }
    if trivial {
        return Some(DimensionVerdict::new(l, Outcome::Holds).with_note("the ring is trivial"));
    }
    if l == -1 {
        let mut v = DimensionVerdict::new(l, Outcome::Fails).with_note("the ring is not trivial");
        v.counterexample = Some(Vec::new());
        return Some(v);
    }
    None
}

/// `A/K_A(j)`.
pub fn krull_boundary_ring<R: RingOracle>(r: &R, j: &[R::El]) -> Result<R> {
    r.quotient(&r.krull_boundary_generators(j)?)
}

/// `A/H_A(j)`.
pub fn heitmann_boundary_ring<R: RingOracle>(r: &R, j: &[R::El]) -> Result<R> {
    r.quotient(&r.heitmann_boundary_generators(j)?)
}

/// The localization at `x^ℕ(1 + xA)` of a finite ring, realized as the
/// quotient by the elements some `s` in the monoid annihilates.
pub fn lower_boundary_ring<R: RingOracle>(r: &R, x: &R::El) -> Result<R> {
    let all = r.enumerate().ok_or_else(|| Error::Ring(format!("{}: lower boundary needs a finite carrier", r.describe())))?;
    let pows = distinct_powers(r, x);
    let mut monoid: Vec<R::El> = Vec::new();
    for a in &all {
        let t = r.add(&r.one(), &r.mul(a, x));
        for (p, _) in &pows {
            let s = r.mul(p, &t);
            if !monoid.contains(&s) {
                monoid.push(s);
            }
        }
    }
    let kernel: Vec<R::El> = all.iter().filter(|b| monoid.iter().any(|s| r.is_zero(&r.mul(s, b)))).cloned().collect();
    r.quotient(&kernel)
}

/// Decides `Kdim A ≤ ℓ`. Finite carriers give exact verdicts; infinite ones
/// are checked on probes plus sampled tuples and report `Unknown` when a
/// search runs out of budget.
pub fn kdim_ring_leq<R: RingOracle>(r: &R, l: i64, strategy: RingStrategy, budget: &RingBudget) -> Result<DimensionVerdict<R::El>> {
    if let Some(v) = base_cases(r.is_trivial(), l) {
        return Ok(v);
    }
    match strategy {
        RingStrategy::Witness => kdim_by_witness(r, l, budget),
        RingStrategy::Upper => {
            let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
            recurse(r, l, budget, &mut rng, &|a, x| krull_boundary_ring(a, std::slice::from_ref(x)), &|a, l, b| {
                kdim_ring_leq(a, l, RingStrategy::Upper, b)
            })
        }
        RingStrategy::Lower => {
            if r.enumerate().is_none() {
                return Ok(DimensionVerdict { exhaustive: false, ..DimensionVerdict::new(l, Outcome::Unknown) }
                    .with_note("lower-boundary recursion needs a finite carrier"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
            recurse(r, l, budget, &mut rng, &|a, x| lower_boundary_ring(a, x), &|a, l, b| kdim_ring_leq(a, l, RingStrategy::Lower, b))
        }
    }
}

fn kdim_by_witness<R: RingOracle>(r: &R, l: i64, budget: &RingBudget) -> Result<DimensionVerdict<R::El>> {
    let len = (l + 1) as usize;
    if let Some(all) = r.enumerate() {
        let count = (all.len() as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
        if all.len() <= super::finite::MAX_TABLE && count <= TABLE_TUPLE_LIMIT {
            return kdim_by_table(r, &all, len, l, budget);
        }
    }
    let (tuples, exhaustive) = tuple_source(r, len, budget);
    let one = r.one();
    let mut witnesses = Vec::new();
    let mut unknown: Option<Vec<R::El>> = None;
    for xs in &tuples {
        match search_collapse(r, xs, &one, budget) {
            CollapseSearch::Found(a, m) => {
                if budget.witnesses {
                    witnesses.push(Witness { xs: xs.clone(), a, m: Some(m) });
                }
            }
            CollapseSearch::Refuted => {
                let mut v = DimensionVerdict::new(l, Outcome::Fails).with_note("no collapse exists for the counterexample");
                v.counterexample = Some(xs.clone());
                return Ok(v);
            }
            CollapseSearch::Unknown => {
                if unknown.is_none() {
                    unknown = Some(xs.clone());
                }
            }
        }
    }
    if let Some(xs) = unknown {
        let mut v = DimensionVerdict::new(l, Outcome::Unknown)
            .with_note(format!("no witness within exp ≤ {}, coeff ≤ {}", budget.exp, budget.coeff));
        v.exhaustive = false;
        v.counterexample = Some(xs);
        return Ok(v);
    }
    let mut v = DimensionVerdict::new(l, Outcome::Holds);
    v.exhaustive = exhaustive;
    v.witnesses = witnesses;
    if !exhaustive {
        v.note = format!("witness verified on {} tuples", tuples.len());
    }
    Ok(v)
}

/// Exhaustive tuple count for the tabulated witness search.
const TABLE_TUPLE_LIMIT: u128 = 4_000_000;

/// Exhaustive witness search over a tabulated copy of a finite ring. The
/// values reachable from `1` through `x_1..x_ℓ` depend only on that suffix
/// and are shared; the tuple collapses iff one of them lies in
/// `{t : x_0^m(t + ax_0) = 0 for some a, m}`.
fn kdim_by_table<R: RingOracle>(r: &R, all: &[R::El], len: usize, l: i64, budget: &RingBudget) -> Result<DimensionVerdict<R::El>> {
    let f = FiniteRing::from_oracle(r)?;
    let n = f.len();
    let pows: Vec<Vec<usize>> = (0..n).map(|x| distinct_powers(&f, &x).into_iter().map(|(p, _)| p).collect()).collect();
    let multiples: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            let mut m: Vec<usize> = (0..n).map(|a| f.mul(&a, &x)).collect();
            m.sort_unstable();
            m.dedup();
            m
        })
        .collect();
    let killed: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|u| pows[x].iter().any(|p| f.mul(p, &u) == f.zero())).collect()).collect();
    let collapsible: Vec<Vec<bool>> =
        (0..n).map(|x| (0..n).map(|t| multiples[x].iter().any(|ax| killed[x][f.add(&t, ax)])).collect()).collect();
    let mut memo: HashMap<Vec<usize>, Vec<bool>> = HashMap::new();
    let mut idx = vec![0usize; len];
    let mut witnesses = Vec::new();
    let one = r.one();
    loop {
        let reach = reachable(&f, &pows, &multiples, &idx[1..], &mut memo);
        let xs = || idx.iter().map(|&i| all[i].clone()).collect::<Vec<_>>();
        if !reach.iter().enumerate().any(|(v, &ok)| ok && collapsible[idx[0]][v]) {
            let mut v = DimensionVerdict::new(l, Outcome::Fails).with_note("no collapse exists for the counterexample");
            v.counterexample = Some(xs());
            return Ok(v);
        }
        if budget.witnesses {
            let xs = xs();
            let (a, m) = collapse_dp(r, all, &xs, &one).ok_or_else(|| Error::Ring("collapse search disagrees with reachability".into()))?;
            witnesses.push(Witness { xs, a, m: Some(m) });
        }
        if !advance(&mut idx, n) {
            break;
        }
    }
    let mut v = DimensionVerdict::new(l, Outcome::Holds);
    v.witnesses = witnesses;
    Ok(v)
}

fn reachable(f: &FiniteRing, pows: &[Vec<usize>], multiples: &[Vec<usize>], suffix: &[usize], memo: &mut HashMap<Vec<usize>, Vec<bool>>) -> Vec<bool> {
    if let Some(v) = memo.get(suffix) {
        return v.clone();
    }
    let n = f.len();
    let out = match suffix.split_first() {
        None => (0..n).map(|v| v == f.one()).collect(),
        Some((&x, rest)) => {
            let inner = reachable(f, pows, multiples, rest, memo);
            let mut out = vec![false; n];
            for v in (0..n).filter(|&v| inner[v]) {
                for ax in &multiples[x] {
                    let t = f.add(&v, ax);
                    for p in &pows[x] {
                        out[f.mul(p, &t)] = true;
                    }
                }
            }
            out
        }
    };
    memo.insert(suffix.to_vec(), out.clone());
    out
}

type BoundaryOf<'a, R> = dyn Fn(&R, &<R as RingOracle>::El) -> Result<R> + 'a;
type Recur<'a, R> = dyn Fn(&R, i64, &RingBudget) -> Result<DimensionVerdict<<R as RingOracle>::El>> + 'a;

fn recurse<R: RingOracle>(
    r: &R,
    l: i64,
    budget: &RingBudget,
    rng: &mut ChaCha8Rng,
    boundary: &BoundaryOf<'_, R>,
    inner: &Recur<'_, R>,
) -> Result<DimensionVerdict<R::El>> {
    let (elems, mut exhaustive) = element_source(r, budget, rng);
    let mut unknown = None;
    // Boundary rings repeat; decide each distinct one once.
    let mut seen: Vec<(R, Outcome)> = Vec::new();
    for x in &elems {
        let b = match boundary(r, x) {
            Ok(b) => b,
            Err(Error::Unknown(m)) | Err(Error::Ring(m)) => {
                unknown.get_or_insert((vec![x.clone()], m));
                continue;
            }
            Err(e) => return Err(e),
        };
        let sub = match seen.iter().find(|(s, _)| s.same_as(&b)) {
            Some((_, o)) if *o == Outcome::Holds => continue,
            _ => inner(&b, l - 1, budget)?,
        };
        exhaustive &= sub.exhaustive;
        match sub.outcome {
            Outcome::Holds => seen.push((b, Outcome::Holds)),
            Outcome::Fails => {
                let mut v = DimensionVerdict::new(l, Outcome::Fails);
                let mut cx = vec![x.clone()];
                cx.extend(sub.counterexample.unwrap_or_default());
                v.counterexample = Some(cx);
                v.exhaustive = true;
                return Ok(v);
            }
            Outcome::Unknown => {
                unknown.get_or_insert((vec![x.clone()], sub.note));
            }
        }
    }
    if let Some((cx, note)) = unknown {
        let mut v = DimensionVerdict::new(l, Outcome::Unknown).with_note(note);
        v.exhaustive = false;
        v.counterexample = Some(cx);
        return Ok(v);
    }
    let mut v = DimensionVerdict::new(l, Outcome::Holds);
    v.exhaustive = exhaustive;
    if !exhaustive {
        v.note = format!("checked {} elements", elems.len());
    }
    Ok(v)
}

/// Decides `Hdim A ≤ ℓ` by recursion through Heitmann boundary rings.
pub fn hdim_ring_leq<R: RingOracle>(r: &R, l: i64, budget: &RingBudget) -> Result<DimensionVerdict<R::El>> {
    if let Some(v) = base_cases(r.is_trivial(), l) {
        return Ok(v);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    recurse(r, l, budget, &mut rng, &|a, x| heitmann_boundary_ring(a, std::slice::from_ref(x)), &|a, l, b| hdim_ring_leq(a, l, b))
}

/// Krull dimension from chains of prime ideals; finite carriers only.
pub fn ring_kdim_oracle<R: RingOracle>(r: &R) -> Result<i64> {
    let f = FiniteRing::from_oracle(r)?;
    let primes = f.prime_ideals();
    let sub = |p: &Vec<bool>, q: &Vec<bool>| p != q && p.iter().zip(q).all(|(a, b)| !a || *b);
    // Longest strict chain ending at each prime, in order of size.
    let mut order: Vec<usize> = (0..primes.len()).collect();
    order.sort_by_key(|&i| primes[i].iter().filter(|b| **b).count());
    let mut len = vec![0i64; primes.len()];
    for (k, &i) in order.iter().enumerate() {
        for &j in &order[..k] {
            if sub(&primes[j], &primes[i]) {
                len[i] = len[i].max(len[j] + 1);
            }
        }
    }
    Ok(len.into_iter().max().unwrap_or(-1))
}

/// `z ∈ H_A[x_0..x_k]` by the quantifier form
/// `∃a_k ∀y_k ∃b_k ⋯ [[z, x_k, a_k, y_k, b_k], …, x_0, a_0, y_0, b_0] = 0`
/// with `[z, x, a, y, b] = 1 + (1 + (z + ax)xy)b`. Finite carriers only.
pub fn heitmann_iterated_member<R: RingOracle>(r: &R, z: &R::El, xs: &[R::El]) -> Result<bool> {
    let all = r.enumerate().ok_or_else(|| Error::Ring(format!("{}: quantifier form needs a finite carrier", r.describe())))?;
    let mut memo = HashMap::new();
    Ok(quantified(r, &all, z, xs, &mut memo))
}

fn bracket<R: RingOracle>(r: &R, z: &R::El, x: &R::El, a: &R::El, y: &R::El, b: &R::El) -> R::El {
    let inner = r.mul(&r.mul(&r.add(z, &r.mul(a, x)), x), y);
    r.add(&r.one(), &r.mul(&r.add(&r.one(), &inner), b))
}

fn quantified<R: RingOracle>(r: &R, all: &[R::El], z: &R::El, xs: &[R::El], memo: &mut HashMap<(R::El, usize), bool>) -> bool {
    let Some((x, rest)) = xs.split_last() else {
        return r.is_zero(z);
    };
    if let Some(&v) = memo.get(&(z.clone(), xs.len())) {
        return v;
    }
    let v = all.iter().any(|a| all.iter().all(|y| all.iter().any(|b| quantified(r, all, &bracket(r, z, x, a, y, b), rest, memo))));
    memo.insert((z.clone(), xs.len()), v);
    v
}

/// `z ∈ H_A[x_0..x_k]` as the kernel of `A → (⋯(A_H^{x_0})⋯)_H^{x_k}`.
pub fn heitmann_kernel_member<R: RingOracle>(r: &R, z: &R::El, xs: &[R::El]) -> Result<bool> {
    let mut ring = r.clone();
    let (mut z, mut xs) = (z.clone(), xs.to_vec());
    for i in 0..xs.len() {
        let next = heitmann_boundary_ring(&ring, std::slice::from_ref(&xs[i]))?;
        z = ring.project(&next, &z);
        for x in xs.iter_mut().skip(i + 1) {
            *x = ring.project(&next, x);
        }
        ring = next;
    }
    Ok(ring.is_zero(&z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Decision, integers, mod_n, poly_over_field, prime_field, FiniteRing};
    use num_bigint::BigInt;

    fn z(k: i64) -> BigInt {
        BigInt::from(k)
    }

    #[test]
    fn verify_collapse_examples() {
        let m4 = mod_n(4).unwrap();
        assert!(verify_collapse(&m4, &[z(2)], &[z(0)], &[2]).unwrap());
        let zz = integers();
        assert!(!verify_collapse(&zz, &[z(2)], &[z(0)], &[1]).unwrap());
        assert!(verify_collapse(&zz, &[z(0), z(0)], &[z(0), z(0)], &[1, 1]).unwrap());
        assert!(verify_collapse(&zz, &[z(1)], &[z(0)], &[1, 2]).is_err());
        assert!(crate::fault::with_fault(Fault::VerifyCollapse, || verify_collapse(&zz, &[z(2)], &[z(0)], &[1]).unwrap()));
    }

    #[test]
    fn small_kdims() {
        let b = RingBudget::default();
        let f5 = prime_field(5).unwrap();
        assert!(kdim_ring_leq(&f5, 0, RingStrategy::Witness, &b).unwrap().holds());
        assert_eq!(kdim_ring_leq(&f5, -1, RingStrategy::Witness, &b).unwrap().outcome, Outcome::Fails);
        let m4 = mod_n(4).unwrap();
        assert!(kdim_ring_leq(&m4, 0, RingStrategy::Witness, &b).unwrap().holds());
        assert!(kdim_ring_leq(&mod_n(1).unwrap(), -1, RingStrategy::Witness, &b).unwrap().holds());
        for s in [RingStrategy::Witness, RingStrategy::Upper, RingStrategy::Lower] {
            let v = kdim_ring_leq(&mod_n(12).unwrap(), 0, s, &b).unwrap();
            assert!(v.holds() && v.exhaustive, "{s:?}");
        }
    }

    #[test]
    fn integers_and_polynomials() {
        let b = RingBudget { witnesses: true, ..RingBudget::default() };
        let zz = integers();
        let v = kdim_ring_leq(&zz, 0, RingStrategy::Witness, &b).unwrap();
        assert_eq!(v.outcome, Outcome::Fails);
        assert_eq!(v.counterexample, Some(vec![z(2)]));
        let v = kdim_ring_leq(&zz, 1, RingStrategy::Witness, &b).unwrap();
        assert!(v.holds() && !v.exhaustive);
        assert!(v.witnesses.iter().all(|w| verify_collapse(&zz, &w.xs, &w.a, w.m.as_ref().unwrap()).unwrap()));
        let p = poly_over_field(5).unwrap();
        let v = kdim_ring_leq(&p, 0, RingStrategy::Witness, &b).unwrap();
        assert_eq!(v.outcome, Outcome::Fails);
        assert_eq!(v.counterexample, Some(vec![vec![0, 1]]));
        assert!(kdim_ring_leq(&p, 1, RingStrategy::Witness, &b).unwrap().holds());
    }

    #[test]
    fn hdim_examples() {
        let b = RingBudget::default();
        assert!(hdim_ring_leq(&mod_n(12).unwrap(), 0, &b).unwrap().holds());
        assert!(hdim_ring_leq(&integers(), 1, &b).unwrap().holds());
        assert_eq!(hdim_ring_leq(&integers(), 0, &b).unwrap().outcome, Outcome::Fails);
        assert!(hdim_ring_leq(&mod_n(1).unwrap(), -1, &b).unwrap().holds());
    }

    #[test]
    fn lower_boundary_monoid() {
        let b = RingBudget::default();
        let m12 = mod_n(12).unwrap();
        assert_eq!(m12.lower_boundary_contains_zero(&z(4), &b), Decision::Yes);
        assert_eq!(integers().lower_boundary_contains_zero(&z(2), &b), Decision::No);
        assert_eq!(integers().lower_boundary_contains_zero(&z(0), &b), Decision::Yes);
        // 1·(1 + (-1)·1) = 0
        assert_eq!(integers().lower_boundary_contains_zero(&z(-1), &b), Decision::Yes);
    }

    #[test]
    fn prime_chain_oracle() {
        for n in 1..=30u64 {
            let r = mod_n(n).unwrap();
            assert_eq!(ring_kdim_oracle(&r).unwrap(), if n == 1 { -1 } else { 0 });
        }
    }

    #[test]
    fn quantifier_form_matches_kernel() {
        for r in [FiniteRing::zmod(4).unwrap(), FiniteRing::zmod(6).unwrap(), FiniteRing::zmod(8).unwrap()] {
            for x0 in 0..r.len() {
                for zz in 0..r.len() {
                    assert_eq!(heitmann_iterated_member(&r, &zz, &[x0]).unwrap(), heitmann_kernel_member(&r, &zz, &[x0]).unwrap());
                }
            }
        }
        let r = FiniteRing::zmod(4).unwrap();
        for x0 in 0..4 {
            for x1 in 0..4 {
                for zz in 0..4 {
                    assert_eq!(
                        heitmann_iterated_member(&r, &zz, &[x0, x1]).unwrap(),
                        heitmann_kernel_member(&r, &zz, &[x0, x1]).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn dp_finds_iterated_krull_members() {
        let r = mod_n(12).unwrap();
        let b = RingBudget::default();
        match search_collapse(&r, &[z(2), z(3)], &r.one(), &b) {
            CollapseSearch::Found(a, m) => assert!(verify_collapse(&r, &[z(2), z(3)], &a, &m).unwrap()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn tabulated_witness_search_agrees_with_dp() {
        let r = mod_n(12).unwrap();
        let b = RingBudget { witnesses: true, ..RingBudget::default() };
        let v = kdim_ring_leq(&r, 1, RingStrategy::Witness, &b).unwrap();
        assert!(v.holds() && v.exhaustive);
        assert_eq!(v.witnesses.len(), 144);
        for w in &v.witnesses {
            assert!(verify_collapse(&r, &w.xs, &w.a, w.m.as_ref().unwrap()).unwrap());
        }
        let t = FiniteRing::zmod(8).unwrap();
        let v = kdim_ring_leq(&t, 2, RingStrategy::Witness, &b).unwrap();
        assert_eq!(v.witnesses.len(), 512);
    }
}
