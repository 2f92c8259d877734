use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::corpus::{Corpus, GroupSpec};
use crate::autos::{
    automorphism_group_with_cap, inner_automorphisms, intermediate_aut_groups, AutGroup,
    Automorphism, AUT_ORDER_CAP,
};
use crate::bounds::{bound_check, f_bound, g_bound, HTable, Verdict};
use crate::error::{Error, Result};
use crate::goursat::{
    aut_class_count, block_report, goursat_decompose, projection_full, PowerStructure,
};
use crate::invariant::{
    a_core_set, cocore_set, minimal_over, quotient_chief_length, relative_length,
};
use crate::perm::{
    quotient, subgroup_classes, ElementSet, PermGroup, Permutation, SubgroupClass,
    ELEMENT_CACHE_CAP, SUBGROUP_LATTICE_CAP,
};

/// The verification runs the harness knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Jordan,
    Theorem,
    Proposition,
    Lemma,
    Saxl,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::Jordan,
        Check::Theorem,
        Check::Proposition,
        Check::Lemma,
        Check::Saxl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Jordan => "jordan",
            Check::Theorem => "theorem",
            Check::Proposition => "proposition",
            Check::Lemma => "lemma",
            Check::Saxl => "saxl",
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct Config {
    /// Order cap for subgroup-lattice and outer-group enumeration.
    pub max_order: u128,
    pub max_aut_order: u128,
    pub table: HTable,
    pub checks: Vec<Check>,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            max_order: SUBGROUP_LATTICE_CAP,
            max_aut_order: AUT_ORDER_CAP,
            table: HTable::default(),
            checks: Check::ALL.to_vec(),
        }
    }
}

impl Config {
    fn runs(&self, c: Check) -> bool {
        self.checks.contains(&c)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JordanRecord {
    pub group: String,
    pub subgroup_id: usize,
    pub subgroup_order: u128,
    pub index: u128,
    pub covered: bool,
    pub pass: bool,
}

/// Quantities from the reduced instance `G/U_A` for one chosen minimal `L`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub l_order: u128,
    /// `|G:UL|`.
    pub index_ul: u128,
    /// `|(UL)_A|`.
    pub k_order: u128,
    /// `ℓ_A(K)`, which must be at most `c - 1`.
    pub k_length: usize,
    /// `ℓ_A(G/L)`, which must equal `c - 1`.
    pub quotient_length: usize,
    /// `|A:Inn(G)| |G:UL|` and `|A : UL Z(G)/Z(G)|`; the first bounds the second.
    pub aut_lhs: u128,
    pub aut_rhs: u128,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremRecord {
    pub group: String,
    pub subgroup_id: usize,
    pub subgroup_order: u128,
    pub aut_id: usize,
    pub n: u128,
    /// `ℓ_A(G/U_A)`, computed for covering pairs.
    pub c: Option<usize>,
    pub index: u128,
    pub covered: bool,
    pub bound_kind: Option<String>,
    pub bound: Option<String>,
    pub pass: bool,
    pub diagnostics: Option<Diagnostics>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSummary {
    pub k: usize,
    pub r: usize,
    pub s: usize,
    pub m: usize,
    pub r_le_n: bool,
    pub m_le_r: bool,
    pub s_le_r: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PropositionRecord {
    pub group: String,
    pub subgroup_id: usize,
    pub aut_id: usize,
    pub l_id: usize,
    pub l_order: u128,
    pub n: u128,
    pub index: u128,
    pub abelian_l: bool,
    /// `degenerate` when `L <= U`, otherwise `abelian` or `nonabelian`.
    pub branch: String,
    pub pass_f: bool,
    /// `|G:U| <= n`, for the abelian branch.
    pub pass_n: Option<bool>,
    pub block: Option<BlockSummary>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NonabelianRecord {
    pub group: String,
    pub subgroup_id: usize,
    pub aut_id: usize,
    pub l_order: u128,
    pub covered: bool,
    pub block: Option<BlockSummary>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LemmaRecord {
    pub k: usize,
    pub partition: String,
    pub tuple: String,
    pub projections_full: bool,
    pub recovered: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SaxlRecord {
    pub group: String,
    pub subgroup_id: usize,
    pub subgroup_order: u128,
    pub cocore_order: u128,
    pub pass: bool,
}

/// A skipped or partial run, or other information worth surfacing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Notice {
    pub group: String,
    pub check: String,
    pub message: String,
}

/// Everything needed to replay a failing check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleEvent {
    pub check: String,
    pub group: GroupSpec,
    pub subgroup: Vec<String>,
    /// Generators of `A`, each as images of the group generators.
    pub automorphisms: Vec<String>,
    pub detail: String,
}

/// Largest covering index seen for each `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exploratory {
    pub n: u128,
    pub max_index: u128,
    pub instances: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Header {
    pub tool: String,
    pub version: String,
    pub h_constant: f64,
    pub log_base: u32,
    pub max_order: u128,
    pub max_aut_order: u128,
    pub element_cap: u128,
    pub corpus_sha256: String,
    pub checks: Vec<String>,
    /// Warnings raised while loading the corpus.
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub header: Header,
    pub jordan: Vec<JordanRecord>,
    pub theorem: Vec<TheoremRecord>,
    pub proposition: Vec<PropositionRecord>,
    pub nonabelian: Vec<NonabelianRecord>,
    pub lemma: Vec<LemmaRecord>,
    pub saxl: Vec<SaxlRecord>,
    pub aut_class_count: Option<usize>,
    pub exploratory: Vec<Exploratory>,
    pub notices: Vec<Notice>,
    pub events: Vec<CounterexampleEvent>,
}

impl Report {
    pub fn empty(header: Header) -> Self {
        Self {
            header,
            jordan: Vec::new(),
            theorem: Vec::new(),
            proposition: Vec::new(),
            nonabelian: Vec::new(),
            lemma: Vec::new(),
            saxl: Vec::new(),
            aut_class_count: None,
            exploratory: Vec::new(),
            notices: Vec::new(),
            events: Vec::new(),
        }
    }

    /// Genuine nonabelian nondegenerate covering instances found.
    pub fn genuine_nonabelian(&self) -> usize {
        self.nonabelian.iter().filter(|r| r.covered).count()
    }

    fn absorb(&mut self, part: GroupOutcome) {
        self.jordan.extend(part.jordan);
        self.theorem.extend(part.theorem);
        self.proposition.extend(part.proposition);
        self.nonabelian.extend(part.nonabelian);
        self.notices.extend(part.notices);
        self.events.extend(part.events);
    }

    fn sort(&mut self) {
        self.jordan
            .sort_by(|a, b| (&a.group, a.subgroup_id).cmp(&(&b.group, b.subgroup_id)));
        self.theorem.sort_by(|a, b| {
            (&a.group, a.subgroup_id, a.aut_id).cmp(&(&b.group, b.subgroup_id, b.aut_id))
        });
        self.proposition.sort_by(|a, b| {
            (&a.group, a.subgroup_id, a.aut_id, a.l_id).cmp(&(
                &b.group,
                b.subgroup_id,
                b.aut_id,
                b.l_id,
            ))
        });
        self.nonabelian.sort_by(|a, b| {
            (&a.group, a.subgroup_id, a.aut_id, a.l_order).cmp(&(
                &b.group,
                b.subgroup_id,
                b.aut_id,
                b.l_order,
            ))
        });
        self.saxl.sort_by_key(|r| r.subgroup_id);
        self.notices.sort();
        self.events.sort_by(|a, b| {
            (&a.check, &a.group.name, &a.detail).cmp(&(&b.check, &b.group.name, &b.detail))
        });
    }
}

pub fn header(corpus: &Corpus, cfg: &Config) -> Header {
    Header {
        tool: "kroncover".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        h_constant: cfg.table.constant(),
        log_base: 2,
        max_order: cfg.max_order,
        max_aut_order: cfg.max_aut_order,
        element_cap: ELEMENT_CACHE_CAP,
        corpus_sha256: corpus.sha256.clone(),
        checks: cfg.checks.iter().map(|c| c.name().to_string()).collect(),
        warnings: corpus.warnings.clone(),
    }
}

/// Runs the configured checks over the corpus.
pub fn run(corpus: &Corpus, cfg: &Config) -> Report {
    let mut report = Report::empty(header(corpus, cfg));
    let parts: Vec<GroupOutcome> = corpus
        .specs
        .par_iter()
        .map(|spec| verify_group(spec, cfg))
        .collect();
    for part in parts {
        report.absorb(part);
    }
    if cfg.runs(Check::Lemma) {
        let (records, events) = verify_lemma();
        report.lemma = records;
        report.events.extend(events);
    }
    if cfg.runs(Check::Saxl) {
        match verify_saxl(cfg) {
            Ok((records, m, events)) => {
                report.saxl = records;
                report.aut_class_count = Some(m);
                report.events.extend(events);
            }
            Err(e) => report.notices.push(Notice {
                group: "Alt(5)".into(),
                check: "saxl".into(),
                message: e.to_string(),
            }),
        }
    }
    report.exploratory = exploratory(&report.theorem);
    report.sort();
    report
}

fn exploratory(records: &[TheoremRecord]) -> Vec<Exploratory> {
    let mut by_n: BTreeMap<u128, (u128, usize)> = BTreeMap::new();
    for r in records.iter().filter(|r| r.covered) {
        let e = by_n.entry(r.n).or_insert((0, 0));
        e.0 = e.0.max(r.index);
        e.1 += 1;
    }
    by_n.into_iter()
        .map(|(n, (max_index, instances))| Exploratory {
            n,
            max_index,
            instances,
        })
        .collect()
}

#[derive(Default)]
struct GroupOutcome {
    jordan: Vec<JordanRecord>,
    theorem: Vec<TheoremRecord>,
    proposition: Vec<PropositionRecord>,
    nonabelian: Vec<NonabelianRecord>,
    notices: Vec<Notice>,
    events: Vec<CounterexampleEvent>,
}

impl GroupOutcome {
    fn merge(&mut self, part: GroupOutcome) {
        self.jordan.extend(part.jordan);
        self.theorem.extend(part.theorem);
        self.proposition.extend(part.proposition);
        self.nonabelian.extend(part.nonabelian);
        self.notices.extend(part.notices);
        self.events.extend(part.events);
    }

    fn notice(&mut self, spec: &GroupSpec, check: &str, message: impl Into<String>) {
        self.notices.push(Notice {
            group: spec.name.clone(),
            check: check.into(),
            message: message.into(),
        });
    }
}

fn event(
    check: &str,
    spec: &GroupSpec,
    a: &AutGroup,
    u: &ElementSet,
    detail: String,
) -> CounterexampleEvent {
    CounterexampleEvent {
        check: check.into(),
        group: spec.clone(),
        subgroup: a
            .subgroup(u)
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect(),
        automorphisms: a
            .automorphisms()
            .iter()
            .map(Automorphism::to_string)
            .collect(),
        detail,
    }
}

/// The checks for one corpus entry.
pub fn verify_group_spec(spec: &GroupSpec, cfg: &Config) -> Report {
    let corpus = Corpus {
        specs: vec![spec.clone()],
        ..Corpus::default()
    };
    let cfg = Config {
        checks: cfg
            .checks
            .iter()
            .copied()
            .filter(|c| !matches!(c, Check::Lemma | Check::Saxl))
            .collect(),
        ..cfg.clone()
    };
    run(&corpus, &cfg)
}

fn verify_group(spec: &GroupSpec, cfg: &Config) -> GroupOutcome {
    let mut out = GroupOutcome::default();
    let wants = [Check::Jordan, Check::Theorem, Check::Proposition];
    if !wants.iter().any(|c| cfg.runs(*c)) {
        return out;
    }
    let g = match spec.build() {
        Ok(g) => g,
        Err(e) => {
            out.notice(spec, "corpus", e.to_string());
            return out;
        }
    };
    let classes = match subgroup_classes(&g, cfg.max_order) {
        Ok(c) => c,
        Err(e) => {
            out.notice(spec, "all", format!("skipped: {e}"));
            return out;
        }
    };
    if cfg.runs(Check::Jordan) {
        match inner_automorphisms(&g) {
            Ok(inn) => jordan(spec, &inn, &classes, &mut out),
            Err(e) => out.notice(spec, "jordan", format!("skipped: {e}")),
        }
    }
    if !(cfg.runs(Check::Theorem) || cfg.runs(Check::Proposition)) {
        return out;
    }
    let auts = match aut_groups(&g, cfg) {
        Ok((auts, partial)) => {
            if let Some(msg) = partial {
                out.notice(spec, "theorem", msg);
            }
            auts
        }
        Err(e) => {
            out.notice(spec, "theorem", format!("skipped: {e}"));
            return out;
        }
    };
    let parts: Vec<GroupOutcome> = auts
        .par_iter()
        .enumerate()
        .map(|(aut_id, a)| {
            let mut part = GroupOutcome::default();
            if let Err(e) = verify_pair_grid(spec, cfg, aut_id, a, &classes, &mut part) {
                part.notice(spec, "theorem", format!("A#{aut_id}: {e}"));
            }
            part
        })
        .collect();
    for part in parts {
        out.merge(part);
    }
    out
}

/// The intermediate groups, or just `Inn` and `Aut` when the outer group
/// is above the cap (returned with a partial-run message).
fn aut_groups(g: &PermGroup, cfg: &Config) -> Result<(Vec<AutGroup>, Option<String>)> {
    let aut = automorphism_group_with_cap(g, cfg.max_aut_order)?;
    match intermediate_aut_groups(&aut, cfg.max_order) {
        Ok(list) => Ok((list, None)),
        Err(Error::CapExceeded { size, cap, .. }) => {
            let inn = inner_automorphisms(g)?;
            Ok((
                vec![inn, aut],
                Some(format!(
                    "partial: |Out| = {size} > {cap}, only A = Inn and A = Aut checked"
                )),
            ))
        }
        Err(e) => Err(e),
    }
}

fn jordan(spec: &GroupSpec, inn: &AutGroup, classes: &[SubgroupClass], out: &mut GroupOutcome) {
    let n = inn.table().len();
    for (id, class) in classes.iter().enumerate() {
        let (union, _) = cocore_set(inn, &class.rep);
        let covered = union.count() == n;
        let is_g = class.rep.count() == n;
        let pass = covered == is_g;
        if !pass {
            out.events.push(event(
                "jordan",
                spec,
                inn,
                &class.rep,
                format!("subgroup #{id}: covered = {covered} but U = G is {is_g}"),
            ));
        }
        out.jordan.push(JordanRecord {
            group: spec.name.clone(),
            subgroup_id: id,
            subgroup_order: class.rep.count() as u128,
            index: (n / class.rep.count()) as u128,
            covered,
            pass,
        });
    }
}

fn order_of_product(t: &crate::perm::ElementTable, u: &ElementSet, l: &ElementSet) -> usize {
    let mut meet = u.clone();
    meet.intersect_with(l);
    let _ = t;
    u.count() * l.count() / meet.count()
}

fn verify_pair_grid(
    spec: &GroupSpec,
    cfg: &Config,
    aut_id: usize,
    a: &AutGroup,
    classes: &[SubgroupClass],
    out: &mut GroupOutcome,
) -> Result<()> {
    let table = a.table().clone();
    let order = table.len();
    let full = ElementSet::full(order);
    let n = a.inn_index().unwrap_or(1);
    let mins = minimal_over(a, &table.singleton_identity(), &full);
    let mut non_instances = 0usize;
    for (sid, class) in classes.iter().enumerate() {
        let u = &class.rep;
        let index = (order / u.count()) as u128;
        let covered = cocore_set(a, u).0.count() == order;
        let mut record = TheoremRecord {
            group: spec.name.clone(),
            subgroup_id: sid,
            subgroup_order: u.count() as u128,
            aut_id,
            n,
            c: None,
            index,
            covered,
            bound_kind: None,
            bound: None,
            pass: true,
            diagnostics: None,
        };
        if covered && cfg.runs(Check::Theorem) {
            let core = a_core_set(a, u);
            let c = quotient_chief_length(a, &core)?;
            let bound = g_bound(n as u64, c as u32, &cfg.table);
            let verdict = bound_check(&BigUint::from(index), &bound);
            record.c = Some(c);
            record.bound_kind = Some(bound.kind().into());
            record.bound = Some(bound.value_or_log2());
            record.pass = verdict == Verdict::Holds;
            if verdict == Verdict::Inconclusive {
                out.notice(
                    spec,
                    "theorem",
                    format!("U#{sid} A#{aut_id}: bound representation too coarse"),
                );
            }
            let diag = diagnostics(a, u, &core, c)?;
            if let Some(d) = &diag {
                record.pass &= d.ok;
            }
            record.diagnostics = diag;
            if !record.pass {
                out.events.push(event(
                    "theorem",
                    spec,
                    a,
                    u,
                    format!("U#{sid} A#{aut_id}: index {index}, n {n}, c {c}, bound {bound}"),
                ));
            }
        }
        if cfg.runs(Check::Theorem) {
            out.theorem.push(record);
        }
        if cfg.runs(Check::Proposition) {
            for (lid, l) in mins.iter().enumerate() {
                if order_of_product(&table, u, l) != order {
                    continue;
                }
                if !covered {
                    non_instances += 1;
                    if !l.is_subset(u) && !is_abelian_set(&table, l) {
                        out.nonabelian
                            .push(nonabelian_candidate(spec, aut_id, sid, a, u, l, false));
                    }
                    continue;
                }
                let p = proposition(spec, cfg, aut_id, a, sid, u, lid, l)?;
                if p.branch == "nonabelian" {
                    out.nonabelian
                        .push(nonabelian_candidate(spec, aut_id, sid, a, u, l, true));
                }
                if !p.pass {
                    out.events.push(event(
                        "proposition",
                        spec,
                        a,
                        u,
                        format!(
                            "U#{sid} A#{aut_id} L#{lid}: branch {}, index {index}, n {n}",
                            p.branch
                        ),
                    ));
                }
                out.proposition.push(p);
            }
        }
    }
    if non_instances > 0 {
        out.notice(
            spec,
            "proposition",
            format!("A#{aut_id}: {non_instances} triples with G = UL do not cover"),
        );
    }
    Ok(())
}

fn is_abelian_set(t: &crate::perm::ElementTable, s: &ElementSet) -> bool {
    let gens = t.small_generating_set(s);
    gens.iter()
        .all(|&x| gens.iter().all(|&y| t.mul(x, y) == t.mul(y, x)))
}

#[allow(clippy::too_many_arguments)]
fn proposition(
    spec: &GroupSpec,
    cfg: &Config,
    aut_id: usize,
    a: &AutGroup,
    sid: usize,
    u: &ElementSet,
    lid: usize,
    l: &ElementSet,
) -> Result<PropositionRecord> {
    let table = a.table();
    let index = (table.len() / u.count()) as u128;
    let n = a.inn_index().unwrap_or(1);
    let abelian = is_abelian_set(table, l);
    let f = f_bound(n as u64, &cfg.table);
    let pass_f = bound_check(&BigUint::from(index), &f) == Verdict::Holds;
    let mut record = PropositionRecord {
        group: spec.name.clone(),
        subgroup_id: sid,
        aut_id,
        l_id: lid,
        l_order: l.count() as u128,
        n,
        index,
        abelian_l: abelian,
        branch: String::new(),
        pass_f,
        pass_n: None,
        block: None,
        pass: pass_f,
    };
    if l.is_subset(u) {
        record.branch = "degenerate".into();
        record.pass &= index == 1;
    } else if abelian {
        record.branch = "abelian".into();
        record.pass_n = Some(index <= n);
        record.pass &= index <= n;
    } else {
        record.branch = "nonabelian".into();
        let rep = block_report(&a.subgroup(u), a, &a.subgroup(l), false)?;
        record.pass &= rep.all_hold();
        record.block = Some(summary(&rep));
    }
    Ok(record)
}

fn summary(rep: &crate::goursat::BlockReport) -> BlockSummary {
    BlockSummary {
        k: rep.k,
        r: rep.r,
        s: rep.s,
        m: rep.m,
        r_le_n: rep.r_le_n,
        m_le_r: rep.m_le_r,
        s_le_r: rep.s_le_r,
    }
}

fn nonabelian_candidate(
    spec: &GroupSpec,
    aut_id: usize,
    sid: usize,
    a: &AutGroup,
    u: &ElementSet,
    l: &ElementSet,
    covered: bool,
) -> NonabelianRecord {
    let (block, note) = match block_report(&a.subgroup(u), a, &a.subgroup(l), true) {
        Ok(rep) => (Some(summary(&rep)), None),
        Err(e) => (None, Some(e.to_string())),
    };
    NonabelianRecord {
        group: spec.name.clone(),
        subgroup_id: sid,
        aut_id,
        l_order: l.count() as u128,
        covered,
        block,
        note,
    }
}

/// Proof-mirroring quantities in the reduced instance `G/U_A`, for the
/// first minimal invariant `L` (by order, then encoding) with `UL < G`.
fn diagnostics(
    a: &AutGroup,
    u: &ElementSet,
    core: &ElementSet,
    c: usize,
) -> Result<Option<Diagnostics>> {
    let table = a.table();
    if core.count() == table.len() {
        return Ok(None);
    }
    let nsub = a.subgroup(core);
    let (_, q) = quotient(a.base(), &nsub)?;
    let abar = crate::autos::induce(a, &nsub, &q)?;
    let t = abar.table().clone();
    let mut ubar = ElementSet::empty(t.len());
    for x in u.iter() {
        ubar.insert(
            t.index_of(&q.image(table.element(x)))
                .expect("image lies in the quotient"),
        );
    }
    let full = ElementSet::full(t.len());
    let mins = minimal_over(&abar, &t.singleton_identity(), &full);
    let Some(l) = mins
        .into_iter()
        .find(|l| order_of_product(&t, &ubar, l) < t.len())
    else {
        return Ok(None);
    };
    let ugens = t.small_generating_set(&ubar);
    let lgens = t.small_generating_set(&l);
    let ul = t.closure(&ubar, &ugens, &lgens);
    let k = a_core_set(&abar, &ul);
    let k_length = relative_length(&abar, &t.singleton_identity(), &k);
    let quotient_length = relative_length(&abar, &l, &full);
    let bgens: Vec<usize> = abar
        .base()
        .generators()
        .iter()
        .map(|x| t.index_of(x).unwrap())
        .collect();
    let center = (0..t.len())
        .filter(|&x| bgens.iter().all(|&y| t.mul(x, y) == t.mul(y, x)))
        .count();
    let ul_center = ul
        .iter()
        .filter(|&x| bgens.iter().all(|&y| t.mul(x, y) == t.mul(y, x)))
        .count();
    let nbar = abar.inn_index().unwrap_or(1);
    let index_ul = (t.len() / ul.count()) as u128;
    let aut_lhs = nbar * index_ul;
    let aut_rhs = abar.order() * ul_center as u128 / ul.count() as u128;
    let _ = center;
    let ok = k_length < c && quotient_length + 1 == c && aut_rhs <= aut_lhs;
    Ok(Some(Diagnostics {
        l_order: l.count() as u128,
        index_ul,
        k_order: k.count() as u128,
        k_length,
        quotient_length,
        aut_lhs,
        aut_rhs,
        ok,
    }))
}

fn alt5() -> PermGroup {
    PermGroup::from_cycles(5, &["(0 1 2 3 4)", "(0 1 2)"]).expect("valid generators")
}

fn set_partitions(k: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for i in 0..k {
        let mut next = Vec::new();
        for p in out {
            for j in 0..p.len() {
                let mut q = p.clone();
                q[j].push(i);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![i]);
            next.push(q);
        }
        out = next;
    }
    out
}

/// Diagonal-product round trips in `Alt(5)^k` for `k` in {2, 3}.
pub fn verify_lemma() -> (Vec<LemmaRecord>, Vec<CounterexampleEvent>) {
    let t = alt5();
    let aut = automorphism_group_with_cap(&t, AUT_ORDER_CAP).expect("Aut(Alt(5)) is small");
    let table = aut.table().clone();
    let id = Permutation::identity(table.len());
    let gens = aut.generators();
    // identity, two generators, their product, and one inner map
    let mut maps: Vec<Permutation> = vec![id.clone(), gens[0].clone()];
    if let Some(g1) = gens.get(1) {
        maps.push(g1.clone());
        maps.push(gens[0].then(g1));
    }
    maps.push(aut.inner().generators()[0].clone());
    maps.dedup();
    let auto = |m: &Permutation| Automorphism::from_element_map(&t, &table, m);

    let mut records = Vec::new();
    let mut events = Vec::new();
    for k in [2usize, 3] {
        let p = PowerStructure::new(&t, k).expect("k >= 1");
        for partition in set_partitions(k) {
            // every assignment of maps to the coordinates in nontrivial parts
            let slots: Vec<usize> = partition
                .iter()
                .filter(|b| b.len() > 1)
                .flatten()
                .copied()
                .collect();
            let combos = maps.len().pow(slots.len() as u32);
            for code in 0..combos {
                let mut choice = vec![id.clone(); k];
                let mut rest = code;
                for &s in &slots {
                    choice[s] = maps[rest % maps.len()].clone();
                    rest /= maps.len();
                }
                let mut gens: Vec<Permutation> = Vec::new();
                let mut expected: Vec<Vec<Automorphism>> = Vec::new();
                for part in &partition {
                    let tuple: Vec<Automorphism> = part.iter().map(|&j| auto(&choice[j])).collect();
                    let d = p.diagonal(part, &tuple).expect("valid part");
                    gens.extend(d.generators().iter().cloned());
                    let first_inv = choice[part[0]].inverse();
                    expected.push(
                        part.iter()
                            .map(|&j| auto(&first_inv.then(&choice[j])))
                            .collect(),
                    );
                }
                let u = PermGroup::new(t.degree() * k, gens).expect("degree matches");
                let full = (0..k).all(|i| projection_full(&u, &p, i).unwrap_or(false));
                let recovered = match goursat_decompose(&u, &p) {
                    Ok(Some(dec)) => {
                        dec.partition == partition
                            && dec
                                .diagonals
                                .iter()
                                .zip(&expected)
                                .all(|((_, got), want)| got == want)
                    }
                    _ => false,
                };
                let record = LemmaRecord {
                    k,
                    partition: format!("{partition:?}"),
                    tuple: choice
                        .iter()
                        .map(|m| maps.iter().position(|x| x == m).unwrap().to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                    projections_full: full,
                    recovered,
                    pass: full && recovered,
                };
                if !record.pass {
                    events.push(CounterexampleEvent {
                        check: "lemma".into(),
                        group: GroupSpec {
                            name: format!("Alt(5)^{k}"),
                            degree: 5 * k,
                            generators: p
                                .product()
                                .generators()
                                .iter()
                                .map(|g| g.to_string())
                                .collect(),
                            order: None,
                            tags: None,
                        },
                        subgroup: u.generators().iter().map(|g| g.to_string()).collect(),
                        automorphisms: Vec::new(),
                        detail: format!("partition {} tuple {}", record.partition, record.tuple),
                    });
                }
                records.push(record);
            }
        }
    }
    (records, events)
}

/// Saxl at desk scale: no proper subgroup of `Alt(5)` has all of `Alt(5)`
/// as its `Aut`-cocore. Also returns the `Aut`-class count.
pub fn verify_saxl(cfg: &Config) -> Result<(Vec<SaxlRecord>, usize, Vec<CounterexampleEvent>)> {
    let t = alt5();
    let aut = automorphism_group_with_cap(&t, cfg.max_aut_order)?;
    let classes = subgroup_classes(&t, cfg.max_order.max(60))?;
    let n = aut.table().len();
    let spec = GroupSpec {
        name: "Alt(5)".into(),
        degree: 5,
        generators: t.generators().iter().map(|g| g.to_string()).collect(),
        order: Some(60),
        tags: None,
    };
    let mut records = Vec::new();
    let mut events = Vec::new();
    for (id, class) in classes.iter().enumerate() {
        let cocore = cocore_set(&aut, &class.rep).0.count();
        let proper = class.rep.count() < n;
        let pass = !proper || cocore < n;
        if !pass {
            events.push(event(
                "saxl",
                &spec,
                &aut,
                &class.rep,
                format!("subgroup #{id} covers"),
            ));
        }
        records.push(SaxlRecord {
            group: "Alt(5)".into(),
            subgroup_id: id,
            subgroup_order: class.rep.count() as u128,
            cocore_order: cocore as u128,
            pass,
        });
    }
    Ok((records, aut_class_count(&t)?, events))
}
