//! Independent oracles and reusable checks shared by the property suite and
//! the acceptance harness. Every check returns `Err(description)` on the first
//! violated property so callers can report a witness.

#![allow(dead_code, clippy::neg_cmp_op_on_partial_ord)]

use bipolar_fuzzy::algebra::NormPair;
use bipolar_fuzzy::kernel::{BipolarValue, PentaValue, ValueClass};
use bipolar_fuzzy::measures::{
    cardinality_point, entropy_point, CardinalityKind, EntropyKind, VectorNorm,
};
use bipolar_fuzzy::metrics::{
    bipolar_distance, bipolar_similarity, fuzzy_distance, omega_distance, tau_distance,
    DistanceKind, Interval,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const TOL: f64 = 1e-9;

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= TOL
}

pub fn bv(mu: f64, nu: f64) -> BipolarValue {
    BipolarValue::new(mu, nu).unwrap()
}

pub fn show(x: &BipolarValue) -> String {
    format!("({}, {})", x.mu(), x.nu())
}

pub const LANDMARKS: [(&str, BipolarValue); 5] = [
    ("T", BipolarValue::TRUE),
    ("F", BipolarValue::FALSE),
    ("U", BipolarValue::UNKNOWN),
    ("C", BipolarValue::CONTRADICTORY),
    ("I", BipolarValue::AMBIGUOUS),
];

/// Every `(i / n, j / n)` for `i, j` in `0..=n`.
pub fn grid(n: u32) -> Vec<BipolarValue> {
    let mut out = Vec::with_capacity(((n + 1) * (n + 1)) as usize);
    for i in 0..=n {
        for j in 0..=n {
            out.push(bv(f64::from(i) / f64::from(n), f64::from(j) / f64::from(n)));
        }
    }
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_value(rng: &mut ChaCha8Rng) -> BipolarValue {
    bv(rng.gen_range(0.0..=1.0), rng.gen_range(0.0..=1.0))
}

pub fn random_values(n: usize, seed: u64) -> Vec<BipolarValue> {
    let mut rng = rng(seed);
    (0..n).map(|_| random_value(&mut rng)).collect()
}

// ---------------------------------------------------------------------------
// oracles

/// Lukasiewicz t-norm.
pub fn luk(x: f64, y: f64) -> f64 {
    (x + y - 1.0).max(0.0)
}

/// Decomposition through the chain of Lukasiewicz t-norms rather than the
/// closed form.
pub fn oracle_penta(x: &BipolarValue) -> [f64; 5] {
    let (mu, nu) = (x.mu(), x.nu());
    let t = luk(mu, 1.0 - nu);
    let f = luk(1.0 - mu, nu);
    let u = luk(1.0 - mu, 1.0 - nu);
    let c = luk(mu, nu);
    let i = luk(luk(luk(1.0 - t, 1.0 - f), 1.0 - u), 1.0 - c);
    [t, f, u, c, i]
}

fn penta_array(p: &PentaValue) -> [f64; 5] {
    [p.t, p.f, p.u, p.c, p.i]
}

/// Partial distance written over the penta components of one axis,
/// `(|a1 - a2| + |b1 - b2|) / (1 + max(a1, a2, b1, b2))`.
pub fn partial_from_components(a1: f64, b1: f64, a2: f64, b2: f64) -> f64 {
    let num = (a1 - a2).abs() + (b1 - b2).abs();
    if num == 0.0 {
        return 0.0;
    }
    num / (1.0 + a1.max(a2).max(b1).max(b2))
}

/// Combined distances rebuilt from oracle penta components.
pub fn oracle_distance(kind: DistanceKind, x1: &BipolarValue, x2: &BipolarValue) -> f64 {
    let [t1, f1, u1, c1, _] = oracle_penta(x1);
    let [t2, f2, u2, c2, _] = oracle_penta(x2);
    let d_tau = partial_from_components(t1, f1, t2, f2);
    let d_omega = partial_from_components(c1, u1, c2, u2);
    match kind {
        DistanceKind::PseudoHamming => {
            let num = (t1 - t2).abs() + (f1 - f2).abs() + (c1 - c2).abs() + (u1 - u2).abs();
            if num == 0.0 {
                0.0
            } else {
                num / (1.0 + t1.max(t2).max(f1).max(f2) + c1.max(c2).max(u1).max(u2))
            }
        }
        DistanceKind::PseudoEuclid => (d_tau * d_tau + d_omega * d_omega).sqrt(),
        DistanceKind::PseudoProb => 1.0 - (1.0 - d_tau) * (1.0 - d_omega),
    }
}

/// The interval distance on `[-1, 1]` in its closed form.
pub fn oracle_signed(x: f64, y: f64) -> f64 {
    if x == y {
        0.0
    } else {
        (x - y).abs() / (1.0 + x.abs().max(y.abs()))
    }
}

pub const SCALAR_ENTROPIES: [EntropyKind; 8] = EntropyKind::ALL;

pub fn entropy(kind: EntropyKind, x: &BipolarValue) -> Option<f64> {
    entropy_point(kind, x).ok().map(|e| e.scalar)
}

pub fn card(kind: CardinalityKind, x: &BipolarValue) -> Option<f64> {
    cardinality_point(kind, x).ok()
}

// ---------------------------------------------------------------------------
// pointwise structure

/// Partition of unity, exclusivity, non-negativity, round trips, agreement
/// with the t-norm chain and the `|tau| + |omega| <= 1` bound.
pub fn check_structure(x: &BipolarValue) -> Check {
    let p = x.to_penta();
    let arr = penta_array(&p);
    ensure!(
        arr.iter().all(|v| *v >= -TOL),
        "negative index {arr:?} at {}",
        show(x)
    );
    ensure!(
        close(arr.iter().sum(), 1.0),
        "indexes sum to {} at {}",
        arr.iter().sum::<f64>(),
        show(x)
    );
    ensure!(
        p.t * p.f <= TOL && p.u * p.c <= TOL,
        "exclusivity broken {arr:?} at {}",
        show(x)
    );

    let oracle = oracle_penta(x);
    for (k, (a, b)) in arr.iter().zip(oracle).enumerate() {
        ensure!(
            close(*a, b),
            "index {k} is {a}, t-norm chain gives {b} at {}",
            show(x)
        );
    }

    let back = p.to_bipolar();
    ensure!(
        close(back.mu(), x.mu()) && close(back.nu(), x.nu()),
        "round trip gives {} at {}",
        show(&back),
        show(x)
    );

    let to = x.to_tau_omega();
    ensure!(
        to.tau.abs() + to.omega.abs() <= 1.0 + TOL,
        "|tau| + |omega| = {} at {}",
        to.tau.abs() + to.omega.abs(),
        show(x)
    );
    ensure!(
        close(to.tau, p.t - p.f) && close(to.omega, p.c - p.u),
        "tau/omega mismatch at {}",
        show(x)
    );
    let again = penta_array(&to.to_penta());
    for (a, b) in arr.iter().zip(again) {
        ensure!(
            close(*a, b),
            "tau/omega round trip gives {again:?} vs {arr:?} at {}",
            show(x)
        );
    }
    Ok(())
}

/// Specialised decompositions and the closed forms measures take on each
/// class of values.
pub fn check_reductions(x: &BipolarValue) -> Check {
    let general = penta_array(&x.to_penta());
    for class in [
        ValueClass::Fuzzy,
        ValueClass::Intuitionistic,
        ValueClass::Paraconsistent,
    ] {
        if !class.admits(x) {
            ensure!(
                x.reduced_penta(class).is_err(),
                "{class} accepted {}",
                show(x)
            );
            continue;
        }
        let reduced = penta_array(&x.reduced_penta(class).unwrap());
        for (a, b) in general.iter().zip(reduced) {
            ensure!(
                close(*a, b),
                "{class} form gives {reduced:?} vs {general:?} at {}",
                show(x)
            );
        }
    }

    let (mu, nu) = (x.mu(), x.nu());
    if ValueClass::Fuzzy.admits(x) {
        let expected = 1.0 - (1.0 - 2.0 * mu).abs();
        for kind in [
            EntropyKind::Distance(DistanceKind::PseudoEuclid),
            EntropyKind::Distance(DistanceKind::PseudoHamming),
            EntropyKind::Distance(DistanceKind::PseudoProb),
            EntropyKind::SzmidtKacprzykPi,
            EntropyKind::GrzegorzewskiMrowka(VectorNorm::Max),
            EntropyKind::GrzegorzewskiMrowka(VectorNorm::Sum),
        ] {
            let e = entropy(kind, x).unwrap();
            ensure!(
                close(e, expected),
                "fuzzy {kind} entropy {e} != {expected} at {}",
                show(x)
            );
        }
        let sk = entropy(EntropyKind::SzmidtKacprzyk, x).unwrap();
        ensure!(
            close(sk, expected / (2.0 - expected)),
            "fuzzy sk entropy {sk} at {}",
            show(x)
        );
        ensure!(
            entropy(EntropyKind::BustinceBurillo, x).unwrap().abs() <= TOL,
            "fuzzy bb entropy at {}",
            show(x)
        );
        for kind in CardinalityKind::ALL {
            let n = card(kind, x).unwrap();
            ensure!(
                close(n, mu),
                "fuzzy {kind} cardinality {n} != {mu} at {}",
                show(x)
            );
        }
    }
    if ValueClass::Intuitionistic.admits(x) {
        let pi = 1.0 - mu - nu;
        let bb = entropy(EntropyKind::BustinceBurillo, x).unwrap();
        ensure!(
            close(bb, pi),
            "intuitionistic bb entropy {bb} != pi {pi} at {}",
            show(x)
        );
        let ph = card(CardinalityKind::Similarity(DistanceKind::PseudoHamming), x).unwrap();
        let expected = (1.0 + mu - nu) / (2.0 + pi);
        ensure!(
            close(ph, expected),
            "intuitionistic ph cardinality {ph} != {expected} at {}",
            show(x)
        );
        let med = card(CardinalityKind::ClassicMed, x).unwrap();
        ensure!(
            close(med, (1.0 + mu - nu) / 2.0),
            "med cardinality {med} at {}",
            show(x)
        );
    }
    if ValueClass::Paraconsistent.admits(x) {
        let strictly = !ValueClass::Intuitionistic.admits(x);
        let kappa = mu + nu - 1.0;
        let bb = entropy(EntropyKind::BustinceBurillo, x).unwrap();
        ensure!(
            close(bb, kappa),
            "paraconsistent bb entropy {bb} != kappa {kappa} at {}",
            show(x)
        );
        let ph = card(CardinalityKind::Similarity(DistanceKind::PseudoHamming), x).unwrap();
        let expected = (1.0 + mu - nu) / (2.0 + kappa);
        ensure!(
            close(ph, expected),
            "paraconsistent ph cardinality {ph} != {expected} at {}",
            show(x)
        );
        for kind in [
            CardinalityKind::ClassicMin,
            CardinalityKind::ClassicMed,
            CardinalityKind::ClassicMax,
        ] {
            ensure!(
                !strictly || card(kind, x).is_none(),
                "{kind} accepted paraconsistent {}",
                show(x)
            );
        }
    }
    Ok(())
}

/// Involutions, the square `dual = complement . negation = negation . complement`
/// and how the operators move values between classes.
pub fn check_unary_algebra(x: &BipolarValue) -> Check {
    let same = |a: &BipolarValue, b: &BipolarValue| close(a.mu(), b.mu()) && close(a.nu(), b.nu());
    ensure!(
        same(&x.complement().complement(), x),
        "complement not involutive at {}",
        show(x)
    );
    ensure!(
        same(&x.dual().dual(), x),
        "dual not involutive at {}",
        show(x)
    );
    ensure!(
        same(&x.negation().negation(), x),
        "negation not involutive at {}",
        show(x)
    );
    ensure!(
        same(&x.complement().negation(), &x.dual()),
        "negation . complement != dual at {}",
        show(x)
    );
    ensure!(
        same(&x.negation().complement(), &x.dual()),
        "complement . negation != dual at {}",
        show(x)
    );

    let intuitionistic = ValueClass::Intuitionistic.admits(x);
    let paraconsistent = ValueClass::Paraconsistent.admits(x);
    ensure!(
        ValueClass::Intuitionistic.admits(&x.complement()) == intuitionistic,
        "complement changed class at {}",
        show(x)
    );
    ensure!(
        ValueClass::Paraconsistent.admits(&x.negation()) == intuitionistic
            && ValueClass::Paraconsistent.admits(&x.dual()) == intuitionistic
            && ValueClass::Intuitionistic.admits(&x.dual()) == paraconsistent,
        "negation/dual did not swap classes at {}",
        show(x)
    );
    Ok(())
}

/// The six De Morgan identities for every registered norm pair.
pub fn check_de_morgan(a: &BipolarValue, b: &BipolarValue) -> Check {
    let same = |p: BipolarValue, q: BipolarValue| close(p.mu(), q.mu()) && close(p.nu(), q.nu());
    for norms in NormPair::ALL {
        let union = a.union(b, norms);
        let inter = a.intersection(b, norms);
        let cases = [
            (
                "(A u B)^n = A^n n B^n",
                union.negation(),
                a.negation().intersection(&b.negation(), norms),
            ),
            (
                "(A u B)^c = A^c n B^c",
                union.complement(),
                a.complement().intersection(&b.complement(), norms),
            ),
            (
                "(A n B)^n = A^n u B^n",
                inter.negation(),
                a.negation().union(&b.negation(), norms),
            ),
            (
                "(A n B)^c = A^c u B^c",
                inter.complement(),
                a.complement().union(&b.complement(), norms),
            ),
            (
                "(A u B)^d = A^d u B^d",
                union.dual(),
                a.dual().union(&b.dual(), norms),
            ),
            (
                "(A n B)^d = A^d n B^d",
                inter.dual(),
                a.dual().intersection(&b.dual(), norms),
            ),
        ];
        for (name, left, right) in cases {
            ensure!(
                same(left, right),
                "{name} fails under {} for {} and {}: {} vs {}",
                norms.as_str(),
                show(a),
                show(b),
                show(&left),
                show(&right)
            );
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// distances

/// Range, d1/s1, d2/s2, d5/s5, the component-form cross-check and the order
/// between kinds for one pair.
pub fn check_distance_pair(x1: &BipolarValue, x2: &BipolarValue) -> Check {
    let (v1, v2) = (x1.to_tau_omega(), x2.to_tau_omega());
    let d_tau = tau_distance(&v1, &v2);
    let d_omega = omega_distance(&v1, &v2);
    let [t1, f1, u1, c1, _] = oracle_penta(x1);
    let [t2, f2, u2, c2, _] = oracle_penta(x2);
    ensure!(
        close(d_tau, partial_from_components(t1, f1, t2, f2)),
        "tau distance {d_tau} disagrees with its (t, f) form for {} and {}",
        show(x1),
        show(x2)
    );
    ensure!(
        close(d_omega, partial_from_components(c1, u1, c2, u2)),
        "omega distance {d_omega} disagrees with its (c, u) form for {} and {}",
        show(x1),
        show(x2)
    );

    let equal = x1.mu() == x2.mu() && x1.nu() == x2.nu();
    let mut by_kind = [0.0; 3];
    for (slot, kind) in DistanceKind::ALL.into_iter().enumerate() {
        let d = bipolar_distance(kind, x1, x2);
        let s = bipolar_similarity(kind, x1, x2);
        by_kind[slot] = d;
        let at = || format!("{kind} for {} and {}", show(x1), show(x2));
        ensure!(
            (-TOL..=1.0 + TOL).contains(&d),
            "d = {d} out of [0, 1]: {}",
            at()
        );
        ensure!(
            (-TOL..=1.0 + TOL).contains(&s),
            "s = {s} out of [0, 1]: {}",
            at()
        );
        ensure!(close(s, 1.0 - d), "s != 1 - d: {}", at());
        ensure!(
            equal == (d == 0.0),
            "d1: d = {d} with equal = {equal}: {}",
            at()
        );
        ensure!(!equal || s == 1.0, "s1: s = {s} for equal values: {}", at());
        ensure!(
            bipolar_distance(kind, x2, x1) == d,
            "d2: asymmetric: {}",
            at()
        );
        ensure!(
            bipolar_similarity(kind, x2, x1) == s,
            "s2: asymmetric: {}",
            at()
        );
        for (op, image) in [
            (
                "complement",
                BipolarValue::complement as fn(&BipolarValue) -> BipolarValue,
            ),
            ("dual", BipolarValue::dual),
            ("negation", BipolarValue::negation),
        ] {
            let moved = bipolar_distance(kind, &image(x1), &image(x2));
            ensure!(
                close(moved, d),
                "d5: {op} moves d from {d} to {moved}: {}",
                at()
            );
            let moved_s = bipolar_similarity(kind, &image(x1), &image(x2));
            ensure!(
                close(moved_s, s),
                "s5: {op} moves s from {s} to {moved_s}: {}",
                at()
            );
        }
        let oracle = oracle_distance(kind, x1, x2);
        ensure!(
            close(d, oracle),
            "d = {d}, component form gives {oracle}: {}",
            at()
        );
    }
    let pick = |k: DistanceKind| by_kind[DistanceKind::ALL.iter().position(|&x| x == k).unwrap()];
    let (pe, pp) = (
        pick(DistanceKind::PseudoEuclid),
        pick(DistanceKind::PseudoProb),
    );
    let (lo, hi) = (d_tau.max(d_omega), d_tau + d_omega);
    ensure!(
        lo <= pe + TOL && pe <= hi + TOL && lo <= pp + TOL && pp <= hi + TOL,
        "pe = {pe} or pp = {pp} outside [max, sum] of ({d_tau}, {d_omega}) for {} and {}",
        show(x1),
        show(x2)
    );
    Ok(())
}

/// All three kinds collapse to the fuzzy distance on fuzzy values.
pub fn check_fuzzy_collapse(mu1: f64, mu2: f64) -> Check {
    let (x1, x2) = (bv(mu1, 1.0 - mu1), bv(mu2, 1.0 - mu2));
    let expected = fuzzy_distance(mu1, mu2);
    let via_interval = Interval::UNIT.distance(mu1, mu2).unwrap();
    ensure!(
        close(expected, via_interval),
        "fuzzy distance {expected} vs interval {via_interval} at {mu1}, {mu2}"
    );
    for kind in DistanceKind::ALL {
        let d = bipolar_distance(kind, &x1, &x2);
        ensure!(
            close(d, expected),
            "{kind} gives {d}, fuzzy distance {expected} at mu = {mu1}, {mu2}"
        );
    }
    Ok(())
}

/// Same-class pairs measured through the specialised decompositions.
pub fn check_reduced_distances(x1: &BipolarValue, x2: &BipolarValue) -> Check {
    for class in [
        ValueClass::Fuzzy,
        ValueClass::Intuitionistic,
        ValueClass::Paraconsistent,
    ] {
        if !(class.admits(x1) && class.admits(x2)) {
            continue;
        }
        let r1 = x1.reduced_penta(class).unwrap().to_tau_omega();
        let r2 = x2.reduced_penta(class).unwrap().to_tau_omega();
        let d_tau = oracle_signed(r1.tau, r2.tau);
        let d_omega = oracle_signed(r1.omega, r2.omega);
        let ph_num = (r1.tau - r2.tau).abs() + (r1.omega - r2.omega).abs();
        let ph = if ph_num == 0.0 {
            0.0
        } else {
            ph_num / (1.0 + r1.tau.abs().max(r2.tau.abs()) + r1.omega.abs().max(r2.omega.abs()))
        };
        for kind in DistanceKind::ALL {
            let e = match kind {
                DistanceKind::PseudoEuclid => d_tau.hypot(d_omega),
                DistanceKind::PseudoHamming => ph,
                DistanceKind::PseudoProb => d_tau + d_omega - d_tau * d_omega,
            };
            let d = bipolar_distance(kind, x1, x2);
            ensure!(
                close(d, e),
                "{class} form of {kind} gives {e}, general {d} for {} and {}",
                show(x1),
                show(x2)
            );
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy)]
pub enum Index {
    T,
    F,
    U,
    C,
}

pub const INDEXES: [Index; 4] = [Index::T, Index::F, Index::U, Index::C];

fn component(p: &[f64; 5], k: Index) -> f64 {
    p[k as usize]
}

/// Moves `delta` of ambiguity into index `k`, holding the other three
/// indexes; `None` when that leaves the valid region.
pub fn raise(x: &BipolarValue, k: Index, delta: f64) -> Option<BipolarValue> {
    let mut p = penta_array(&x.to_penta());
    let partner = match k {
        Index::T => Index::F,
        Index::F => Index::T,
        Index::U => Index::C,
        Index::C => Index::U,
    };
    if p[4] < delta || component(&p, partner) > 0.0 {
        return None;
    }
    p[k as usize] += delta;
    p[4] -= delta;
    let [t, f, u, c, i] = p;
    let moved = PentaValue::new(t, f, u, c, i.max(0.0)).ok()?.to_bipolar();
    Some(moved)
}

/// d6/s6: raising the larger of a pair's components never lowers the
/// distance; raising the smaller one (without passing the larger) never
/// raises it. Similarity moves the opposite way.
pub fn check_monotonicity(x1: &BipolarValue, x2: &BipolarValue, delta: f64) -> Check {
    let (p1, p2) = (penta_array(&x1.to_penta()), penta_array(&x2.to_penta()));
    for k in INDEXES {
        let (a1, a2) = (component(&p1, k), component(&p2, k));
        let (hi, lo, hi_first) = if a1 >= a2 {
            (x1, x2, true)
        } else {
            (x2, x1, false)
        };
        let (hi_val, lo_val) = (a1.max(a2), a1.min(a2));
        let order = |moved: BipolarValue, other: &BipolarValue, moved_first: bool| {
            if moved_first {
                (moved, *other)
            } else {
                (*other, moved)
            }
        };
        for kind in DistanceKind::ALL {
            let d = bipolar_distance(kind, x1, x2);
            let s = bipolar_similarity(kind, x1, x2);
            if let Some(up) = raise(hi, k, delta) {
                let (y1, y2) = order(up, lo, hi_first);
                let d_up = bipolar_distance(kind, &y1, &y2);
                let s_up = bipolar_similarity(kind, &y1, &y2);
                ensure!(
                    d_up + TOL >= d && s_up <= s + TOL,
                    "d6/s6: raising max {k:?} by {delta} moves {kind} distance {d} -> {d_up} for {} and {}",
                    show(x1),
                    show(x2)
                );
            }
            if lo_val + delta <= hi_val {
                if let Some(up) = raise(lo, k, delta) {
                    let (y1, y2) = order(up, hi, !hi_first);
                    let d_up = bipolar_distance(kind, &y1, &y2);
                    let s_up = bipolar_similarity(kind, &y1, &y2);
                    ensure!(
                        d_up <= d + TOL && s_up + TOL >= s,
                        "d6/s6: raising min {k:?} by {delta} moves {kind} distance {d} -> {d_up} for {} and {}",
                        show(x1),
                        show(x2)
                    );
                }
            }
        }
    }
    Ok(())
}

/// Interval metric identity, symmetry and triangle inequality on `[-1, 1]`.
pub fn check_interval_triple(x: f64, y: f64, z: f64, tol: f64) -> Check {
    let i = Interval::SIGNED;
    let d = |a: f64, b: f64| i.distance(a, b).unwrap();
    let (xy, yz, xz) = (d(x, y), d(y, z), d(x, z));
    if xy + yz < xz - tol {
        return Err(format!(
            "triangle: d({x},{y}) + d({y},{z}) = {} < d({x},{z}) = {xz}",
            xy + yz
        ));
    }
    if (xy == 0.0) != (x == y) {
        return Err(format!("identity: d({x},{y}) = {xy}"));
    }
    if d(y, x) != xy {
        return Err(format!(
            "symmetry: d({x},{y}) = {xy}, d({y},{x}) = {}",
            d(y, x)
        ));
    }
    if (xy - oracle_signed(x, y)).abs() > tol {
        return Err(format!(
            "closed form: d({x},{y}) = {xy}, expected {}",
            oracle_signed(x, y)
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// measures

/// Cardinality is similarity to T, distance-derived entropy is twice the
/// distance to the nearer crisp point, plus c3, c4 and e4.
pub fn check_measures(x: &BipolarValue) -> Check {
    for kind in DistanceKind::ALL {
        let n = card(CardinalityKind::Similarity(kind), x).unwrap();
        let s = bipolar_similarity(kind, x, &BipolarValue::TRUE);
        ensure!(
            close(n, s),
            "{kind} cardinality {n} != s(x, T) = {s} at {}",
            show(x)
        );

        let e = entropy(EntropyKind::Distance(kind), x).unwrap();
        let near = bipolar_distance(kind, x, &BipolarValue::TRUE).min(bipolar_distance(
            kind,
            x,
            &BipolarValue::FALSE,
        ));
        ensure!(
            close(e, 2.0 * near),
            "{kind} entropy {e} != 2 min(d(x,T), d(x,F)) = {} at {}",
            2.0 * near,
            show(x)
        );
    }

    for kind in CardinalityKind::ALL {
        let (Some(n), Some(nc)) = (card(kind, x), card(kind, &x.complement())) else {
            continue;
        };
        if matches!(kind, CardinalityKind::Similarity(_)) {
            let nd = card(kind, &x.dual()).unwrap();
            let nn = card(kind, &x.negation()).unwrap();
            ensure!(
                close(n, nd),
                "c3: {kind} n(x) = {n}, n(x^d) = {nd} at {}",
                show(x)
            );
            ensure!(
                close(nc, nn),
                "c3: {kind} n(x^c) = {nc}, n(x^n) = {nn} at {}",
                show(x)
            );
        }
        if kind != CardinalityKind::ClassicMax {
            ensure!(
                n + nc <= 1.0 + TOL,
                "c4: {kind} n(x) + n(x^c) = {} at {}",
                n + nc,
                show(x)
            );
        }
    }

    for kind in SCALAR_ENTROPIES {
        let Some(e) = entropy(kind, x) else { continue };
        for (op, image) in [
            ("complement", x.complement()),
            ("dual", x.dual()),
            ("negation", x.negation()),
        ] {
            let Some(moved) = entropy(kind, &image) else {
                continue;
            };
            ensure!(
                close(e, moved),
                "e4: {kind} entropy {e} vs {op} {moved} at {}",
                show(x)
            );
        }
    }
    Ok(())
}

/// c5 for the cardinalities published to satisfy it and found to do so.
pub const INCLUSION_MONOTONE: [CardinalityKind; 3] = [
    CardinalityKind::Similarity(DistanceKind::PseudoHamming),
    CardinalityKind::ClassicMin,
    CardinalityKind::ClassicMed,
];

/// c5: `x1 ⊇ x2` (more membership, less non-membership) implies
/// `n(x1) >= n(x2)`.
pub fn check_inclusion(kind: CardinalityKind, x1: &BipolarValue, x2: &BipolarValue) -> Check {
    let (big, small) = if x1.mu() >= x2.mu() && x1.nu() <= x2.nu() {
        (x1, x2)
    } else if x2.mu() >= x1.mu() && x2.nu() <= x1.nu() {
        (x2, x1)
    } else {
        return Ok(());
    };
    let (Some(nb), Some(ns)) = (card(kind, big), card(kind, small)) else {
        return Ok(());
    };
    ensure!(
        nb + TOL >= ns,
        "c5: {kind} n{} = {nb} < n{} = {ns}",
        show(big),
        show(small)
    );
    Ok(())
}
