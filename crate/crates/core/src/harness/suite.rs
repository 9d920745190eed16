use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use serde_json::{json, Value};

use super::brute::{brute_force_count, cross_check_named_conditions, SEARCH_LIMIT};
use super::random::{random_group_element_pair, Seed};
use crate::correspondence::{
    identify, identify_parabolic, parabolic_representative, pattern_to_matrix, rank_signature,
};
use crate::linalg::{is_two_nilpotent, jay, rat, t_transpose, ExactMatrix, GroupKind, PatternKind};
use crate::patterns::{count_borel, enumerate, glue, LinkPattern, SpaceSpec};
use crate::quiver::{ar_sequences, pattern_to_summands, symmetric_endo_dim};

/// Groups of checks that `run_suite` can be restricted to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckFamily {
    Lie,
    Counting,
    Conditions,
    Glue,
    Representatives,
    Conjugation,
    Summands,
    Stabilizers,
    Ar,
    Nilradical,
}

impl CheckFamily {
    pub const ALL: [CheckFamily; 10] = [
        CheckFamily::Lie,
        CheckFamily::Counting,
        CheckFamily::Conditions,
        CheckFamily::Glue,
        CheckFamily::Representatives,
        CheckFamily::Conjugation,
        CheckFamily::Summands,
        CheckFamily::Stabilizers,
        CheckFamily::Ar,
        CheckFamily::Nilradical,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckFamily::Lie => "lie",
            CheckFamily::Counting => "counting",
            CheckFamily::Conditions => "conditions",
            CheckFamily::Glue => "glue",
            CheckFamily::Representatives => "representatives",
            CheckFamily::Conjugation => "conjugation",
            CheckFamily::Summands => "summands",
            CheckFamily::Stabilizers => "stabilizers",
            CheckFamily::Ar => "ar",
            CheckFamily::Nilradical => "nilradical",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.as_str() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Largest rank l exercised by the (cheaper) families.
    pub max_rank: usize,
    pub seed: Seed,
    /// Random group elements per pattern in the conjugation family.
    pub conjugations: usize,
    pub kinds: Vec<PatternKind>,
    pub families: Vec<CheckFamily>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            max_rank: 3,
            seed: Seed(2024),
            conjugations: 10,
            kinds: vec![PatternKind::Symplectic, PatternKind::Orthogonal],
            families: CheckFamily::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportEntry {
    pub test_id: String,
    pub params: Value,
    pub status: Status,
    pub details: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct SuiteReport {
    pub entries: Vec<ReportEntry>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    pub fn summary(&self) -> String {
        let failed = self.failures().count();
        format!(
            "{} checks, {} passed, {} failed",
            self.entries.len(),
            self.entries.len() - failed,
            failed
        )
    }
}

struct Recorder {
    entries: BTreeMap<String, ReportEntry>,
}

impl Recorder {
    fn record(
        &mut self,
        test_id: String,
        params: Value,
        outcome: std::result::Result<String, String>,
    ) {
        let (status, details) = match outcome {
            Ok(d) => (Status::Pass, d),
            Err(d) => (Status::Fail, d),
        };
        let prev = self.entries.insert(
            test_id.clone(),
            ReportEntry {
                test_id,
                params,
                status,
                details,
            },
        );
        debug_assert!(prev.is_none(), "duplicate test id");
    }
}

type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn groups(kind: PatternKind, l: usize) -> Vec<GroupKind> {
    match kind {
        PatternKind::Symplectic => vec![GroupKind::Symplectic(l)],
        PatternKind::Orthogonal => vec![GroupKind::OrthogonalEven(l), GroupKind::OrthogonalOdd(l)],
    }
}

/// All compositions of l (block vectors of flags ending in dimension l).
pub fn compositions(l: usize) -> Vec<Vec<usize>> {
    if l == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=l {
        for mut rest in compositions(l - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All standard isotropic flags of g, including the empty one.
pub fn all_flags(g: GroupKind) -> Vec<SpaceSpec> {
    let l = g.rank();
    (0u32..1 << l)
        .map(|mask| {
            let dims = (1..=l).filter(|d| mask & (1 << (d - 1)) != 0).collect();
            SpaceSpec::new(g, dims).expect("subsets of 1..=l are flags")
        })
        .collect()
}

fn pattern_list(ps: &[LinkPattern]) -> String {
    ps.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn check_lie(g: GroupKind, seed: Seed) -> Outcome {
    let (l, n) = (g.rank(), g.n());
    let dim = g.lie_algebra_dim();
    let want = if g.is_symplectic() {
        l * (n + 1)
    } else {
        n * (n - 1) / 2
    };
    ensure(dim == want, || {
        format!("lie algebra dimension {dim}, expected {want}")
    })?;
    let borel = g.borel_subalgebra_dim();
    let want_b = match g {
        GroupKind::OrthogonalEven(_) => l * l,
        _ => l * l + l,
    };
    ensure(borel == want_b, || {
        format!("borel dimension {borel}, expected {want_b}")
    })?;
    let f = g.form_matrix();
    let sym = if g.is_symplectic() {
        f.transpose() == -&f
    } else {
        f.transpose() == f
    };
    ensure(sym && f.rank() == n, || {
        "form has the wrong symmetry or is degenerate".into()
    })?;
    let j = jay(n).map_err(|e| e.to_string())?;
    ensure(&j * &j == ExactMatrix::identity(n), || "J² ≠ I".into())?;
    let basis = g.unit_basis();
    ensure(basis.len() == dim, || {
        format!("unit basis has {} elements", basis.len())
    })?;
    let mut rng_seed = seed;
    for round in 0..3u64 {
        rng_seed = rng_seed.derive(round);
        let pick = |s: Seed| {
            let mut m = ExactMatrix::zeros(n, n);
            for (k, (_, e)) in basis.iter().enumerate() {
                let c = (s.derive(k as u64).0 % 5) as i64 - 2;
                m = &m + &e.scale(&rat(c));
            }
            m
        };
        let a = pick(rng_seed.derive(1));
        let b = pick(rng_seed.derive(2));
        let tt =
            t_transpose(&t_transpose(&a).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(tt == a, || "anti-transpose is not an involution".into())?;
        let member = g.lie_member(&a.commutator(&b)).map_err(|e| e.to_string())?;
        ensure(member, || "commutator left the Lie algebra".into())?;
    }
    Ok(format!("dim g = {dim}, dim b = {borel}"))
}

fn check_counting(kind: PatternKind, l: usize) -> Outcome {
    let rec = count_borel(kind, l);
    let b = vec![1; l];
    let en = enumerate(kind, &b).len();
    ensure(rec == en.into(), || {
        format!("recurrence {rec} ≠ enumeration {en}")
    })?;
    match brute_force_count(kind, l, &b) {
        Ok(bf) => {
            ensure(bf as usize == en, || {
                format!("brute force {bf} ≠ enumeration {en}")
            })?;
            Ok(format!("{en} (recurrence, enumeration, brute force)"))
        }
        Err(_) => Ok(format!("{en} (recurrence, enumeration)")),
    }
}

fn check_parabolic_counting(kind: PatternKind, b: &[usize]) -> Outcome {
    let en = enumerate(kind, b);
    let set: BTreeSet<&LinkPattern> = en.iter().collect();
    ensure(set.len() == en.len(), || "duplicate patterns".into())?;
    ensure(en.iter().all(LinkPattern::validate), || {
        "an enumerated pattern is invalid".into()
    })?;
    match brute_force_count(kind, b.len(), b) {
        Ok(bf) => {
            ensure(bf as usize == en.len(), || {
                format!("brute force {bf} ≠ enumeration {}", en.len())
            })?;
            Ok(format!("{} patterns (brute force agrees)", en.len()))
        }
        Err(_) => Ok(format!(
            "{} patterns (search space above {SEARCH_LIMIT})",
            en.len()
        )),
    }
}

fn check_glue(spec: &SpaceSpec) -> Outcome {
    let g = spec.group();
    let kind = g.pattern_kind();
    let mut image = BTreeSet::new();
    for p in enumerate(kind, &vec![1; g.rank()]) {
        let q = glue(&p, spec).map_err(|e| e.to_string())?;
        ensure(q.validate(), || format!("glue({p}) = {q} is invalid"))?;
        image.insert(q);
    }
    let target: BTreeSet<LinkPattern> = enumerate(kind, &spec.block_vector()).into_iter().collect();
    ensure(image == target, || {
        let missing: Vec<LinkPattern> = target.difference(&image).cloned().collect();
        format!("not onto; missing {}", pattern_list(&missing))
    })?;
    Ok(format!(
        "{} Borel patterns onto {} enhanced patterns",
        g.rank(),
        target.len()
    ))
}

fn check_representatives(g: GroupKind) -> Outcome {
    let patterns = enumerate(g.pattern_kind(), &vec![1; g.rank()]);
    let mut signatures = BTreeMap::new();
    for p in &patterns {
        let x = pattern_to_matrix(p, g).map_err(|e| e.to_string())?;
        ensure(
            g.lie_member(&x).unwrap_or(false) && is_two_nilpotent(&x),
            || format!("representative of {p} is not in N(2)"),
        )?;
        let q = identify(&x, g).map_err(|e| format!("identify failed on {p}: {e}"))?;
        ensure(&q == p, || format!("identify(repr({p})) = {q}"))?;
        let table = rank_signature(&x).table().to_vec();
        if let Some(other) = signatures.insert(table, p.clone()) {
            return Err(format!("{p} and {other} share a rank signature"));
        }
    }
    Ok(format!(
        "{} patterns, signatures pairwise distinct",
        patterns.len()
    ))
}

fn check_parabolic_representatives(spec: &SpaceSpec) -> Outcome {
    let patterns = enumerate(spec.group().pattern_kind(), &spec.block_vector());
    for p in &patterns {
        let x = parabolic_representative(p, spec).map_err(|e| e.to_string())?;
        let q = identify_parabolic(&x, spec).map_err(|e| e.to_string())?;
        ensure(&q == p, || format!("identify_parabolic(repr({p})) = {q}"))?;
    }
    Ok(format!("{} enhanced patterns round-trip", patterns.len()))
}

fn check_conjugation(spec: &SpaceSpec, seed: Seed, trials: usize) -> Outcome {
    let g = spec.group();
    let form = g.form_matrix();
    let patterns = enumerate(g.pattern_kind(), &spec.block_vector());
    let mut count = 0u64;
    for (pi, p) in patterns.iter().enumerate() {
        let x = parabolic_representative(p, spec).map_err(|e| e.to_string())?;
        for t in 0..trials {
            let s = seed.derive(pi as u64).derive(t as u64);
            let u = random_group_element_pair(spec, s);
            ensure(&(&u.matrix.transpose() * &form) * &u.matrix == form, || {
                format!("seed {} gives ᵀuFu ≠ F", s.0)
            })?;
            let y = u.conjugate(&x);
            let q = if spec.is_borel() {
                identify(&y, g)
            } else {
                identify_parabolic(&y, spec)
            }
            .map_err(|e| format!("{p}, seed {}: {e}", s.0))?;
            ensure(&q == p, || {
                format!("{p} conjugated with seed {} identified as {q}", s.0)
            })?;
            count += 1;
        }
    }
    Ok(format!(
        "{count} conjugates over {} patterns",
        patterns.len()
    ))
}

fn check_summands(spec: &SpaceSpec) -> Outcome {
    let want = spec.dimension_vector();
    let palindrome: Vec<usize> = want.iter().rev().copied().collect();
    ensure(palindrome == want, || {
        format!("{want:?} is not palindromic")
    })?;
    let patterns = enumerate(spec.group().pattern_kind(), &spec.block_vector());
    for p in &patterns {
        let m = pattern_to_summands(p, spec).map_err(|e| e.to_string())?;
        let got = m.dimension_vector();
        ensure(got == want, || {
            format!("{p}: {m} has dimension vector {got:?}, expected {want:?}")
        })?;
    }
    Ok(format!("{} patterns sum to {want:?}", patterns.len()))
}

fn check_stabilizers(spec: &SpaceSpec) -> Outcome {
    let flag = spec.flag();
    let endo = symmetric_endo_dim(spec, None).map_err(|e| e.to_string())?;
    let parabolic = flag.parabolic_dim();
    ensure(endo == parabolic, || {
        format!("symmetric endomorphisms {endo} ≠ parabolic dimension {parabolic}")
    })?;
    if spec.is_borel() {
        let b = spec.group().borel_subalgebra_dim();
        ensure(endo == b, || {
            format!("complete flag gives {endo}, borel dimension is {b}")
        })?;
    }
    if spec.is_maximal() {
        for p in enumerate(spec.group().pattern_kind(), &spec.block_vector()) {
            let x = parabolic_representative(&p, spec).map_err(|e| e.to_string())?;
            let with_loop = symmetric_endo_dim(spec, Some(&x)).map_err(|e| e.to_string())?;
            let centralizer = flag.centralizer_dim(&x).map_err(|e| e.to_string())?;
            ensure(with_loop == centralizer, || {
                format!("{p}: endomorphisms {with_loop} ≠ centralizer {centralizer}")
            })?;
        }
    }
    Ok(format!("dim End = dim p = {endo}"))
}

fn check_ar(l: usize) -> Outcome {
    let report = ar_sequences(l);
    for s in &report.sequences {
        ensure(s.is_exact(), || format!("{}: {s} is not exact", s.tag))?;
    }
    Ok(format!(
        "{} sequences exact, {} skipped",
        report.sequences.len(),
        report.skipped.len()
    ))
}

fn check_nilradical(g: GroupKind) -> Outcome {
    let patterns = enumerate(g.pattern_kind(), &vec![1; g.rank()]);
    let mut nil = 0;
    for p in &patterns {
        let x = pattern_to_matrix(p, g).map_err(|e| e.to_string())?;
        let upper = x.is_strictly_upper_triangular();
        ensure(upper == p.is_nilradical(), || {
            format!(
                "{p}: strictly upper {upper}, nilradical {}",
                p.is_nilradical()
            )
        })?;
        nil += usize::from(upper);
    }
    let classes: BTreeSet<_> = patterns
        .iter()
        .map(LinkPattern::strip_orientation)
        .collect();
    Ok(format!(
        "{nil} nilradical patterns, {} unoriented classes",
        classes.len()
    ))
}

/// Runs the selected check families and returns a report sorted by test id.
///
/// Everything is a pure function of the configuration, so equal configs
/// give byte-identical JSON.
pub fn run_suite(config: &SuiteConfig) -> SuiteReport {
    let mut rec = Recorder {
        entries: BTreeMap::new(),
    };
    let on = |f: CheckFamily| config.families.contains(&f);
    let top = config.max_rank;
    let conj_top = top.min(3);
    let seed = config.seed;
    for &kind in &config.kinds {
        let kname = kind.as_str();
        if on(CheckFamily::Counting) {
            for l in 0..=top {
                rec.record(
                    format!("counting/{kname}/l={l}"),
                    json!({"kind": kname, "l": l}),
                    check_counting(kind, l),
                );
                for b in compositions(l).into_iter().filter(|b| b.len() < l) {
                    rec.record(
                        format!("counting/{kname}/b={b:?}"),
                        json!({"kind": kname, "b": b}),
                        check_parabolic_counting(kind, &b),
                    );
                }
            }
        }
        if on(CheckFamily::Conditions) {
            for l in 0..=top.min(3) {
                let outcome = match cross_check_named_conditions(kind, l) {
                    Ok((n, None)) => Ok(format!("{n} raw multisets agree")),
                    Ok((_, Some(m))) => Err(m),
                    Err(e) => Err(e.to_string()),
                };
                rec.record(
                    format!("conditions/{kname}/l={l}"),
                    json!({"kind": kname, "l": l}),
                    outcome,
                );
            }
        }
        for l in 1..=top {
            for g in groups(kind, l) {
                let gname = g.name();
                let params = json!({"group": gname});
                if on(CheckFamily::Lie) {
                    rec.record(
                        format!("lie/{gname}"),
                        params.clone(),
                        check_lie(g, seed.derive(g.n() as u64)),
                    );
                }
                if on(CheckFamily::Representatives) {
                    rec.record(
                        format!("representatives/{gname}"),
                        params.clone(),
                        check_representatives(g),
                    );
                }
                if on(CheckFamily::Nilradical) {
                    rec.record(
                        format!("nilradical/{gname}"),
                        params.clone(),
                        check_nilradical(g),
                    );
                }
                for spec in all_flags(g) {
                    let dims = spec.dims().to_vec();
                    let p = json!({"group": gname, "dims": dims});
                    let id = |fam: &str| format!("{fam}/{gname}/dims={dims:?}");
                    if on(CheckFamily::Summands) {
                        rec.record(id("summands"), p.clone(), check_summands(&spec));
                    }
                    if on(CheckFamily::Stabilizers) {
                        rec.record(id("stabilizers"), p.clone(), check_stabilizers(&spec));
                    }
                    if !spec.is_maximal() {
                        continue;
                    }
                    if on(CheckFamily::Glue) {
                        rec.record(id("glue"), p.clone(), check_glue(&spec));
                    }
                    if on(CheckFamily::Representatives) && !spec.is_borel() {
                        rec.record(
                            id("parabolic_representatives"),
                            p.clone(),
                            check_parabolic_representatives(&spec),
                        );
                    }
                    if on(CheckFamily::Conjugation) && l <= conj_top {
                        let mut q = p.clone();
                        q["trials"] = json!(config.conjugations);
                        q["seed"] = json!(seed.0);
                        let s = seed.derive(
                            g.n() as u64 * 1000 + dims.iter().map(|&d| 1u64 << d).sum::<u64>(),
                        );
                        rec.record(
                            id("conjugation"),
                            q,
                            check_conjugation(&spec, s, config.conjugations),
                        );
                    }
                }
            }
        }
    }
    if on(CheckFamily::Ar) {
        for l in 1..=top + 1 {
            rec.record(format!("ar/l={l}"), json!({"l": l}), check_ar(l));
        }
    }
    SuiteReport {
        entries: rec.entries.into_values().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes_and_is_deterministic() {
        let config = SuiteConfig {
            max_rank: 2,
            conjugations: 3,
            ..SuiteConfig::default()
        };
        let a = run_suite(&config);
        if let Some(e) = a.failures().next() {
            panic!("{}: {}", e.test_id, e.details);
        }
        let b = run_suite(&config);
        assert_eq!(a.to_json(), b.to_json());
        let ids: Vec<&str> = a.entries.iter().map(|e| e.test_id.as_str()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn family_filter() {
        let config = SuiteConfig {
            max_rank: 2,
            families: vec![CheckFamily::Ar],
            ..SuiteConfig::default()
        };
        let r = run_suite(&config);
        assert_eq!(r.entries.len(), 3);
        assert!(r.entries.iter().all(|e| e.test_id.starts_with("ar/")));
    }

    #[test]
    fn compositions_and_flags() {
        assert_eq!(compositions(3).len(), 4);
        assert_eq!(all_flags(GroupKind::Symplectic(3)).len(), 8);
    }
}
