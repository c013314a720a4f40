//! Cross-check suites: every constructive decider against the spectrum
//! oracle, boundary identities, Birkhoff duality, and the transport between
//! rings and their Zariski lattices.

use crate::corpus::{random_posets, standard_corpus, CorpusEntry, CorpusSpec};
use crate::dimension::{
    hdim_leq, heitmann_boundary_ideal, heitmann_lattice, jdim_leq, kdim_brouwer_form, kdim_heyting_form, kdim_leq,
    krull_boundary_filter, krull_boundary_ideal, DimOptions, Strategy,
};
use crate::error::{Error, Result};
use crate::heyting::is_boolean;
use crate::ideals::{conductor, diagram_from_ideal_cover, glue, jacobson, limit_of_ideal_cover, quotient, IdealHandle};
use crate::lattice::{downset_lattice, order_isomorphic, Element, Lattice};
use crate::ring::{
    distinct_powers, hdim_ring_leq, heitmann_iterated_member, heitmann_kernel_member, integers, kdim_ring_leq, mod_n,
    poly_over_field, ring_kdim_oracle, verify_collapse, zar_lattice_adapter, zar_leq, Decision, FiniteRing, RingBudget,
    RingOracle, RingStrategy, ZarAdapter,
};
use crate::spectra::{hdim_oracle, jdim_oracle, jspec_lattice, kdim_oracle, prime_ideals, spectrum_roundtrip};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Oracle,
    Boundary,
    Duality,
    RingTransport,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Oracle, Suite::Boundary, Suite::Duality, Suite::RingTransport];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Oracle => "oracle",
            Suite::Boundary => "boundary",
            Suite::Duality => "duality",
            Suite::RingTransport => "ring-transport",
        })
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Suite::Oracle),
            "boundary" => Ok(Suite::Boundary),
            "duality" => Ok(Suite::Duality),
            "ring-transport" | "ring_transport" | "ring" => Ok(Suite::RingTransport),
            _ => Err(Error::Invalid(format!("unknown suite `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub seed: u64,
    pub count: usize,
    pub max_gens: usize,
    pub max_rels: usize,
    /// Lattices above this size are skipped by the boundary and duality suites.
    pub max_elements: usize,
    pub max_points: usize,
    pub posets: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        let c = CorpusSpec::default();
        CheckOptions { seed: c.seed, count: c.count, max_gens: c.max_gens, max_rels: c.max_rels, max_elements: 64, max_points: 8, posets: 100 }
    }
}

impl CheckOptions {
    fn corpus(&self) -> Vec<CorpusEntry> {
        standard_corpus(&CorpusSpec { seed: self.seed, count: self.count, max_gens: self.max_gens, max_rels: self.max_rels })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub property: String,
    pub instance: String,
    /// Element count of the lattice, or carrier size of the ring.
    pub size: usize,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checks: usize,
    pub failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub instances: usize,
    pub skipped: usize,
    pub checks: usize,
    pub passed: usize,
    pub failures: usize,
    /// The failure on the smallest instance.
    pub first_failure: Option<Failure>,
    pub properties: BTreeMap<String, Tally>,
}

impl SuiteOutcome {
    pub fn ok(&self) -> bool {
        self.failures == 0
    }

    /// Whether `property` was checked at least once and never failed.
    pub fn property_ok(&self, property: &str) -> bool {
        self.properties.get(property).is_some_and(|t| t.checks > 0 && t.failures == 0)
    }
}

struct Recorder {
    suite: Suite,
    instances: usize,
    skipped: usize,
    checks: usize,
    passed: usize,
    failures: usize,
    first: Option<Failure>,
    properties: BTreeMap<String, Tally>,
}

#[derive(Clone)]
struct Inst {
    name: String,
    size: usize,
}

impl Recorder {
    fn new(suite: Suite) -> Self {
        Recorder { suite, instances: 0, skipped: 0, checks: 0, passed: 0, failures: 0, first: None, properties: BTreeMap::new() }
    }

    fn check(&mut self, property: &str, inst: &Inst, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        self.properties.entry(property.to_string()).or_default().checks += 1;
        if ok {
            self.passed += 1;
        } else {
            self.fail(property, inst, detail());
        }
    }

    fn fail(&mut self, property: &str, inst: &Inst, detail: String) {
        self.failures += 1;
        self.properties.entry(property.to_string()).or_default().failures += 1;
        if self.first.as_ref().is_none_or(|f| inst.size < f.size) {
            self.first = Some(Failure { property: property.into(), instance: inst.name.clone(), size: inst.size, detail });
        }
    }

    /// Runs one instance; an error counts as a failure of `property`.
    fn run(&mut self, property: &str, inst: &Inst, body: impl FnOnce(&mut Self) -> Result<()>) {
        self.instances += 1;
        if let Err(e) = body(self) {
            self.checks += 1;
            self.properties.entry(property.to_string()).or_default().checks += 1;
            self.fail(property, inst, format!("error: {e}"));
        }
    }

    fn finish(self) -> SuiteOutcome {
        SuiteOutcome {
            suite: self.suite,
            instances: self.instances,
            skipped: self.skipped,
            checks: self.checks,
            passed: self.passed,
            failures: self.failures,
            first_failure: self.first,
            properties: self.properties,
        }
    }
}

pub fn run_suite(suite: Suite, opts: &CheckOptions) -> SuiteOutcome {
    let mut rec = Recorder::new(suite);
    match suite {
        Suite::Oracle => oracle_suite(&mut rec, opts),
        Suite::Boundary => boundary_suite(&mut rec, opts),
        Suite::Duality => duality_suite(&mut rec, opts),
        Suite::RingTransport => ring_suite(&mut rec, opts),
    }
    rec.finish()
}

fn lattice_inst(e: &CorpusEntry) -> Result<Inst> {
    Ok(Inst { name: e.name.clone(), size: e.lattice.enumerate_elements()?.len() })
}

const BOUNDS: std::ops::RangeInclusive<i64> = -1..=4;

fn oracle_suite(rec: &mut Recorder, opts: &CheckOptions) {
    for e in opts.corpus() {
        let inst = match lattice_inst(&e) {
            Ok(i) => i,
            Err(err) => {
                rec.fail("enumeration", &Inst { name: e.name.clone(), size: usize::MAX }, err.to_string());
                continue;
            }
        };
        rec.run("oracle evaluation", &inst.clone(), |rec| oracle_lattice(rec, &inst, &e.lattice));
    }
}

fn oracle_lattice(rec: &mut Recorder, inst: &Inst, t: &Lattice) -> Result<()> {
    let kd = kdim_oracle(t)?;
    let jd = jdim_oracle(t)?;
    let hd = hdim_oracle(t)?;
    let trivial = t.is_trivial();
    let (j0, _) = quotient(t, &[jacobson(&IdealHandle::zero(t))?.generator()?], &[])?;
    for l in BOUNDS {
        for s in [Strategy::Global2c, Strategy::Upper2a, Strategy::Lower2b] {
            let v = kdim_leq(t, l, &DimOptions::strategy(s))?;
            rec.check("kdim decider = oracle", inst, v.holds() == (kd <= l), || format!("{s:?} at ℓ={l}: {} but oracle Kdim = {kd}", v.outcome));
        }
        let j = jdim_leq(t, l, &DimOptions::default())?.holds();
        rec.check("jdim decider = oracle", inst, j == (jd <= l), || format!("ℓ={l}: decider {j}, oracle Jdim = {jd}"));
        let h = hdim_leq(t, l, &DimOptions::default())?.holds();
        rec.check("hdim decider = oracle", inst, h == (hd <= l), || format!("ℓ={l}: decider {h}, oracle Hdim = {hd}"));
        let hf = kdim_heyting_form(t, l)?;
        rec.check("Heyting form = oracle", inst, hf == (kd <= l), || format!("ℓ={l}: form {hf}, oracle Kdim = {kd}"));
        let bf = kdim_brouwer_form(t, l)?;
        rec.check("Brouwer form = oracle", inst, bf == (kd <= l), || format!("ℓ={l}: form {bf}, oracle Kdim = {kd}"));
        let k = kdim_leq(t, l, &DimOptions::default())?.holds();
        let kq = kdim_leq(&j0, l, &DimOptions::default())?.holds();
        let chain = (!k || kq) && (!kq || j) && (!j || h);
        rec.check("comparison chain", inst, chain, || format!("ℓ={l}: Kdim T ≤ ℓ {k}, Kdim T/J(0) ≤ ℓ {kq}, Jdim ≤ ℓ {j}, Hdim ≤ ℓ {h}"));
    }
    if !trivial {
        let b = is_boolean(t)?;
        let z = kdim_leq(t, 0, &DimOptions::default())?.holds();
        rec.check("boolean iff zero-dimensional", inst, b == z, || format!("boolean {b}, Kdim ≤ 0 {z}"));
        rec.check("Jdim = 0 when nontrivial", inst, jd == 0, || format!("oracle Jdim = {jd}"));
    }
    let op = kdim_oracle(&t.opposite())?;
    rec.check("Kdim of the opposite", inst, op == kd, || format!("Kdim T = {kd}, Kdim T° = {op}"));
    let he = heitmann_lattice(t)?.0;
    let iso = order_isomorphic(&jspec_lattice(t)?, &he)?;
    rec.check("Jspec lattice ≍ He(T)", inst, iso, || "not order-isomorphic".into());
    Ok(())
}

fn boundary_suite(rec: &mut Recorder, opts: &CheckOptions) {
    for e in opts.corpus() {
        let inst = match lattice_inst(&e) {
            Ok(i) if i.size <= opts.max_elements => i,
            _ => {
                rec.skipped += 1;
                continue;
            }
        };
        rec.run("boundary evaluation", &inst.clone(), |rec| boundary_lattice(rec, &inst, &e.lattice));
    }
}

fn boundary_lattice(rec: &mut Recorder, inst: &Inst, t: &Lattice) -> Result<()> {
    let tab = t.enumerate_elements()?;
    let elems = tab.elements().to_vec();
    let kb: Vec<IdealHandle> = elems.iter().map(|x| krull_boundary_ideal(t, x)).collect::<Result<_>>()?;
    let hb: Vec<IdealHandle> = elems.iter().map(|x| heitmann_boundary_ideal(t, x)).collect::<Result<_>>()?;
    let zero = IdealHandle::zero(t);
    for (x, k) in elems.iter().zip(&kb) {
        let gens = k.generators().map(<[Element]>::to_vec).unwrap_or_else(|| vec![x.clone()]);
        let c = conductor(&zero, &gens)?;
        rec.check("Krull boundary ideal is regular", inst, c.same_members(&zero)?, || format!("x = {}", t.display(x)));
    }
    for a in tab.ids() {
        for b in a..tab.len() {
            let (j, m) = (tab.join(a, b), tab.meet(a, b));
            let show = || format!("x = {}, y = {}", t.display(&elems[a]), t.display(&elems[b]));
            let lhs = kb[a].intersect(&kb[b])?;
            let rhs = kb[j].intersect(&kb[m])?;
            rec.check("Krull boundary intersections", inst, lhs.same_members(&rhs)?, show);
            let lhs = hb[a].intersect(&hb[b])?;
            let rhs = hb[j].intersect(&hb[m])?;
            rec.check("Heitmann boundary intersections", inst, lhs.same_members(&rhs)?, show);
            if m == tab.bottom() && a < b {
                let s = [elems[a].clone(), elems[b].clone()];
                let lim = limit_of_ideal_cover(t, &s)?;
                rec.check("reconstruction from a cover", inst, order_isomorphic(&lim, t)?, show);
                let glued = glue(&diagram_from_ideal_cover(t, &s)?)?;
                rec.check("gluing the induced diagram", inst, order_isomorphic(&glued.lattice, t)?, show);
            }
        }
    }
    Ok(())
}

fn duality_suite(rec: &mut Recorder, opts: &CheckOptions) {
    for e in opts.corpus() {
        let inst = match lattice_inst(&e) {
            Ok(i) if i.size <= opts.max_elements => i,
            _ => {
                rec.skipped += 1;
                continue;
            }
        };
        rec.run("duality evaluation", &inst.clone(), |rec| {
            rec.check("downsets of the spectrum ≍ T", &inst, spectrum_roundtrip(&e.lattice)?, || "not order-isomorphic".into());
            Ok(())
        });
    }
    for (i, p) in random_posets(opts.seed, opts.posets, opts.max_points).into_iter().enumerate() {
        let inst = Inst { name: format!("poset #{i} ({} points, {} strict pairs)", p.len(), p.strict_pairs().len()), size: p.len() };
        rec.run("duality evaluation", &inst.clone(), |rec| {
            let back = prime_ideals(&downset_lattice(&p)?)?.poset();
            rec.check("spectrum of the downsets ≅ P", &inst, back.isomorphic(&p), || format!("spectrum has {} points", back.len()));
            Ok(())
        });
    }
}

/// Moduli and table rings the transport checks run on.
pub const TRANSPORT_MODULI: [u64; 6] = [4, 8, 12, 30, 36, 60];

/// `𝔽₂ × 𝔽₂ × 𝔽₂` and `ℤ/2 × ℤ/4`.
pub fn table_rings() -> Result<Vec<FiniteRing>> {
    let f2 = FiniteRing::zmod(2)?;
    Ok(vec![FiniteRing::product(&FiniteRing::product(&f2, &f2)?, &f2)?, FiniteRing::product(&f2, &FiniteRing::zmod(4)?)?])
}

fn divisors(n: u64) -> Vec<BigInt> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| BigInt::from(d % n)).collect()
}

fn ring_suite(rec: &mut Recorder, opts: &CheckOptions) {
    for n in TRANSPORT_MODULI {
        let inst = Inst { name: format!("Z/{n}"), size: n as usize };
        rec.run("transport evaluation", &inst.clone(), |rec| {
            let r = mod_n(n)?;
            transport(rec, &inst, &r, &divisors(n))?;
            zmod_quotients(rec, &inst, &r, n)
        });
    }
    match table_rings() {
        Ok(rings) => {
            for r in rings {
                let inst = Inst { name: r.describe(), size: r.len() };
                let pool: Vec<usize> = (0..r.len()).collect();
                rec.run("transport evaluation", &inst.clone(), |rec| transport(rec, &inst, &r, &pool));
            }
        }
        Err(e) => rec.fail("table rings", &Inst { name: "tables".into(), size: 8 }, e.to_string()),
    }
    let inst = Inst { name: "Z/n, n ≤ 1000".into(), size: 1000 };
    rec.run("Jacobson products", &inst.clone(), |rec| jacobson_products(rec, &inst, opts.seed));
    let inst = Inst { name: "Z/n collapse arithmetic".into(), size: 60 };
    rec.run("collapse arithmetic", &inst.clone(), |rec| collapse_arithmetic(rec, &inst, opts.seed));
    let inst = Inst { name: "Z and F5[X]".into(), size: usize::MAX };
    rec.run("infinite rings", &inst.clone(), |rec| infinite_rings(rec, &inst, opts.seed));
}

fn adapter_ideal_has<R: RingOracle>(ad: &ZarAdapter<R>, h: &IdealHandle, z: &R::El) -> Result<bool> {
    h.contains(&ad.d_req(z)?)
}

/// Elementwise correspondences between ring-side ideals and lattice-side
/// ideals of the adapter, which is all of `Zar A` for these pools.
fn transport<R: RingOracle>(rec: &mut Recorder, inst: &Inst, r: &R, pool: &[R::El]) -> Result<()> {
    let ad = zar_lattice_adapter(r, pool)?;
    let t = ad.lattice();
    let all = r.enumerate().ok_or_else(|| Error::Ring("transport needs a finite carrier".into()))?;
    let pool = ad.pool().to_vec();
    let show = |x: &R::El| r.show(x);
    for (i, x) in pool.iter().enumerate() {
        for (k, y) in pool.iter().enumerate() {
            let lat = t.leq(&Element::generator(i), &Element::generator(k))?;
            let ring = zar_leq(r, std::slice::from_ref(x), std::slice::from_ref(y));
            rec.check("adapter order = radical order", inst, lat == ring, || format!("D({}) ≤ D({})", show(x), show(y)));
        }
    }
    for j in &pool {
        let dj = ad.d_req(j)?;
        let principal = IdealHandle::principal(t, &dj)?;
        let jac = jacobson(&principal)?;
        let kgens = r.krull_boundary_generators(std::slice::from_ref(j))?;
        let kl = krull_boundary_ideal(t, &dj)?;
        let hgens = r.heitmann_boundary_generators(std::slice::from_ref(j))?;
        let hl = heitmann_boundary_ideal(t, &dj)?;
        let kf = krull_boundary_filter(t, &dj)?;
        // S_j^K = j^ℕ(1 + jA)
        let monoid: Vec<R::El> = distinct_powers(r, j)
            .iter()
            .flat_map(|(p, _)| all.iter().map(move |a| r.mul(p, &r.add(&r.one(), &r.mul(a, j)))))
            .collect();
        for z in &pool {
            let ctx = || format!("j = {}, z = {}", show(j), show(z));
            let ring = r.jacobson_member(z, std::slice::from_ref(j)).require("J_A membership")?;
            rec.check("lattice Jacobson = ring Jacobson", inst, adapter_ideal_has(&ad, &jac, z)? == ring, ctx);
            let ring = r.radical_member(z, &kgens);
            rec.check("Krull boundary ideal = IZ(K_A(j))", inst, adapter_ideal_has(&ad, &kl, z)? == ring, ctx);
            let ring = r.radical_member(z, &hgens);
            rec.check("Heitmann boundary ideal = IZ(H_A(j))", inst, adapter_ideal_has(&ad, &hl, z)? == ring, ctx);
            let ring = monoid.iter().any(|s| r.radical_member(s, std::slice::from_ref(z)));
            rec.check("Krull boundary filter = FZ(S^K)", inst, kf.contains(&ad.d_req(z)?)? == ring, ctx);
            let lat = t.equal(&t.join(&dj, &ad.d_req(z)?)?, &t.top())?;
            let ring = all.iter().any(|a| r.radical_member(&r.add(&r.one(), &r.mul(a, j)), std::slice::from_ref(z)));
            rec.check("complement filter = FZ(1 + jA)", inst, lat == ring, ctx);
        }
    }
    let kd = ring_kdim_oracle(r)?;
    let lkd = kdim_oracle(t)?;
    rec.check("ring Kdim oracle = Zar Kdim oracle", inst, kd == lkd, || format!("ring {kd}, lattice {lkd}"));
    let lhd = hdim_oracle(t)?;
    let budget = RingBudget::default();
    for l in -1..=2 {
        for s in [RingStrategy::Witness, RingStrategy::Upper, RingStrategy::Lower] {
            let v = kdim_ring_leq(r, l, s, &budget)?;
            rec.check("ring kdim decider = oracle", inst, v.holds() == (kd <= l), || format!("{s:?} at ℓ={l}: {}, oracle {kd}", v.outcome));
        }
        let h = hdim_ring_leq(r, l, &budget)?;
        rec.check("ring hdim = Zar hdim", inst, h.holds() == (lhd <= l), || format!("ℓ={l}: ring {}, lattice oracle {lhd}", h.outcome));
        let hl = hdim_leq(t, l, &DimOptions::default())?.holds();
        rec.check("ring hdim = lattice hdim decider", inst, h.holds() == hl, || format!("ℓ={l}: ring {}, lattice {hl}", h.outcome));
    }
    if all.len() <= 12 {
        for x0 in &pool {
            for z in &all {
                let q = heitmann_iterated_member(r, z, std::slice::from_ref(x0))?;
                let k = heitmann_kernel_member(r, z, std::slice::from_ref(x0))?;
                rec.check("Heitmann quantifier form = kernel", inst, q == k, || format!("z = {}, x = [{}]", show(z), show(x0)));
            }
        }
        for x0 in &pool {
            for x1 in &pool {
                let xs = [x0.clone(), x1.clone()];
                for z in &pool {
                    let q = heitmann_iterated_member(r, z, &xs)?;
                    let k = heitmann_kernel_member(r, z, &xs)?;
                    rec.check("Heitmann quantifier form = kernel", inst, q == k, || format!("z = {}, x = [{}, {}]", show(z), show(x0), show(x1)));
                }
            }
        }
    }
    Ok(())
}

/// `Zar(A/⟨j⟩)` against the quotient of `Zar A` by `↓D(j)`.
fn zmod_quotients(rec: &mut Recorder, inst: &Inst, r: &crate::ring::EuclidRing<crate::ring::Integers>, n: u64) -> Result<()> {
    let pool = divisors(n);
    let ad = zar_lattice_adapter(r, &pool)?;
    for j in &pool {
        let q = r.quotient(std::slice::from_ref(j))?;
        let (lq, _) = quotient(ad.lattice(), &[ad.d_req(j)?], &[])?;
        let images: Vec<BigInt> = pool.iter().map(|x| r.project(&q, x)).collect();
        let aq = zar_lattice_adapter(&q, &images)?;
        rec.check("Zar of a quotient ≍ quotient of Zar", inst, order_isomorphic(aq.lattice(), &lq)?, || format!("j = {j}"));
        for (i, x) in pool.iter().enumerate() {
            for (k, y) in pool.iter().enumerate() {
                let lat = lq.leq(&Element::generator(i), &Element::generator(k))?;
                let ring = zar_leq(&q, &[images[i].clone()], &[images[k].clone()]);
                rec.check("Zar of a quotient, elementwise", inst, lat == ring, || format!("j = {j}, D({x}) ≤ D({y})"));
            }
        }
    }
    Ok(())
}

/// `J(j₁) ∩ J(j₂) = J(j₁j₂)` on sampled elements of `ℤ/n`.
fn jacobson_products(rec: &mut Recorder, inst: &Inst, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x4a4a);
    for n in 2..=1000u64 {
        let r = mod_n(n)?;
        for _ in 0..4 {
            let [j1, j2, x] = [0, 0, 0].map(|_| BigInt::from(rng.gen_range(0..n)));
            let a = r.jacobson_member(&x, std::slice::from_ref(&j1)).and(r.jacobson_member(&x, std::slice::from_ref(&j2)));
            let b = r.jacobson_member(&x, &[r.mul(&j1, &j2)]);
            rec.check("J(j₁) ∩ J(j₂) = J(j₁j₂)", inst, a == b && a != Decision::Unknown, || format!("n = {n}, j₁ = {j1}, j₂ = {j2}, x = {x}"));
        }
    }
    Ok(())
}

/// `verify_collapse` against the same identity evaluated in `i128` modulo `n`.
fn collapse_arithmetic(rec: &mut Recorder, inst: &Inst, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc011);
    for _ in 0..300 {
        let n: i128 = rng.gen_range(2..=60);
        let len = rng.gen_range(1..=3);
        let xs: Vec<i128> = (0..len).map(|_| rng.gen_range(0..n)).collect();
        let a: Vec<i128> = (0..len).map(|_| rng.gen_range(0..n)).collect();
        let m: Vec<u32> = (0..len).map(|_| rng.gen_range(0..4)).collect();
        let mut v: i128 = 1;
        for i in (0..len).rev() {
            v = (v + a[i] * xs[i]) % n;
            for _ in 0..m[i] {
                v = v * xs[i] % n;
            }
        }
        let expect = v == 0;
        let r = mod_n(n as u64)?;
        let big = |v: &[i128]| v.iter().map(|&k| BigInt::from(k)).collect::<Vec<_>>();
        let got = verify_collapse(&r, &big(&xs), &big(&a), &m)?;
        rec.check("collapse identity = direct arithmetic", inst, got == expect, || format!("n = {n}, xs = {xs:?}, a = {a:?}, m = {m:?}"));
    }
    Ok(())
}

/// `ℤ` and `𝔽₅[X]` have dimension exactly 1.
fn infinite_rings(rec: &mut Recorder, inst: &Inst, seed: u64) -> Result<()> {
    let budget = RingBudget { seed, samples: 20, ..RingBudget::default() };
    let z = integers();
    let p = poly_over_field(5)?;
    for (name, zero, one) in [
        ("Z", kdim_ring_leq(&z, 0, RingStrategy::Witness, &budget)?.outcome, kdim_ring_leq(&z, 1, RingStrategy::Witness, &budget)?.outcome),
        ("F5[X]", kdim_ring_leq(&p, 0, RingStrategy::Witness, &budget)?.outcome, kdim_ring_leq(&p, 1, RingStrategy::Witness, &budget)?.outcome),
    ] {
        use crate::dimension::Outcome;
        rec.check("Kdim ≤ 0 fails", inst, zero == Outcome::Fails, || format!("{name}: {zero}"));
        rec.check("Kdim ≤ 1 holds", inst, one == Outcome::Holds, || format!("{name}: {one}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fault::{with_fault, Fault};

    fn small() -> CheckOptions {
        CheckOptions { count: 40, posets: 20, ..CheckOptions::default() }
    }

    #[test]
    fn suites_pass() {
        for s in Suite::ALL {
            let o = run_suite(s, &small());
            assert!(o.ok(), "{s}: {:?}", o.first_failure);
            assert!(o.checks > 0);
        }
    }

    #[test]
    fn faults_are_noticed() {
        let o = with_fault(Fault::Leq, || run_suite(Suite::Oracle, &small()));
        assert!(!o.ok());
        let o = with_fault(Fault::Jacobson, || run_suite(Suite::Oracle, &small()));
        assert!(!o.ok());
        let o = with_fault(Fault::VerifyCollapse, || run_suite(Suite::RingTransport, &small()));
        assert!(!o.ok());
    }

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
    }
}
