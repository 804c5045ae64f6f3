//! Per-graph verdicts over the known results about L(G), and corpus-scale
//! campaigns built on them.
//!
//! A check whose hypothesis does not hold is skipped with reason
//! `hypothesis` and never passes. A check that needs L(G) while the cycle
//! enumeration ran out of budget, or needs χ while the solver did, is skipped
//! with reason `budget`.

mod campaign;
mod corpus;

pub use campaign::{mine, run_campaign, run_on_graphs, CheckTally, Failure, MinePredicate, MineResult, Report, Timing, REPORT_VERSION};
pub use corpus::{parse_graph6_lines, CorpusSource};

use std::cell::OnceCell;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cycles::{cycle_lengths, min_pairwise_odd_cycle_intersection, shortest_odd_cycle, CycleSpectrum, DEFAULT_CYCLE_BUDGET};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::to_graph6;
use crate::invariants::{
    chromatic_number_with_budget, clique_number, criticality_given_chi, extend_precoloring, ColoringCertificate,
    DEFAULT_NODE_BUDGET,
};
use crate::structure::{
    block_decomposition, detect_book, dirac_decomposition_check, find_k4, find_w6, is_three_connected,
    is_two_connected, non_separating_induced_odd_cycle, odd_cycle_with_two_diagonals, two_separations,
    vertex_connectivity,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckId {
    GyarfasBound,
    GyarfasEquality,
    WangSingle,
    #[serde(rename = "wang_35")]
    Wang35,
    #[serde(rename = "thm_3l")]
    Thm3l,
    ThmKl,
    KrsExtension,
    NonseparatingExists,
    BookCharacterization,
    VossTwoDiagonals,
    #[serde(rename = "lemma_3connected")]
    Lemma3connected,
    #[serde(rename = "lemma_intersect2")]
    LemmaIntersect2,
    #[serde(rename = "dirac_2cut")]
    Dirac2cut,
}

impl CheckId {
    pub const ALL: [CheckId; 13] = [
        CheckId::GyarfasBound,
        CheckId::GyarfasEquality,
        CheckId::WangSingle,
        CheckId::Wang35,
        CheckId::Thm3l,
        CheckId::ThmKl,
        CheckId::KrsExtension,
        CheckId::NonseparatingExists,
        CheckId::BookCharacterization,
        CheckId::VossTwoDiagonals,
        CheckId::Lemma3connected,
        CheckId::LemmaIntersect2,
        CheckId::Dirac2cut,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::GyarfasBound => "gyarfas_bound",
            CheckId::GyarfasEquality => "gyarfas_equality",
            CheckId::WangSingle => "wang_single",
            CheckId::Wang35 => "wang_35",
            CheckId::Thm3l => "thm_3l",
            CheckId::ThmKl => "thm_kl",
            CheckId::KrsExtension => "krs_extension",
            CheckId::NonseparatingExists => "nonseparating_exists",
            CheckId::BookCharacterization => "book_characterization",
            CheckId::VossTwoDiagonals => "voss_two_diagonals",
            CheckId::Lemma3connected => "lemma_3connected",
            CheckId::LemmaIntersect2 => "lemma_intersect2",
            CheckId::Dirac2cut => "dirac_2cut",
        }
    }

    pub fn all() -> BTreeSet<CheckId> {
        CheckId::ALL.into_iter().collect()
    }

    /// Parses a comma-separated list; `all` selects every check.
    pub fn parse_list(s: &str) -> Result<BTreeSet<CheckId>> {
        let mut out = BTreeSet::new();
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            if item == "all" {
                out.extend(CheckId::ALL);
            } else {
                out.insert(item.parse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::InvalidParameter("empty check list".into()));
        }
        Ok(out)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown check `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SkipReason {
    Hypothesis,
    Budget,
}

/// Evidence attached to a failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub detail: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub vertices: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub colors: Vec<u8>,
}

impl Witness {
    fn new(detail: impl Into<String>) -> Self {
        Witness { detail: detail.into(), vertices: Vec::new(), colors: Vec::new() }
    }

    fn on(mut self, vertices: impl IntoIterator<Item = usize>) -> Self {
        self.vertices = vertices.into_iter().collect();
        self
    }

    fn colored(mut self, colors: Vec<u8>) -> Self {
        self.colors = colors;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CheckOutcome {
    Pass,
    Fail { witness: Witness },
    Skip { reason: SkipReason },
}

impl CheckOutcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, CheckOutcome::Fail { .. })
    }

    fn verdict(ok: bool, witness: impl FnOnce() -> Witness) -> Self {
        if ok {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail { witness: witness() }
        }
    }
}

const SKIP_HYPOTHESIS: CheckOutcome = CheckOutcome::Skip { reason: SkipReason::Hypothesis };

/// Per-graph enumeration and solver limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Cycles visited by the spectrum enumeration.
    pub cycles: u64,
    /// Branch nodes per exact coloring solve.
    pub solver_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { cycles: DEFAULT_CYCLE_BUDGET, solver_nodes: DEFAULT_NODE_BUDGET }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub graph6: String,
    pub n: usize,
    pub edge_count: usize,
    pub spectrum: CycleSpectrum,
    /// `None` when the solver budget ran out.
    pub chi: Option<usize>,
    pub omega: usize,
    pub checks: BTreeMap<CheckId, CheckOutcome>,
}

impl Verdict {
    pub fn has_failure(&self) -> bool {
        self.checks.values().any(CheckOutcome::is_fail)
    }
}

/// A needed quantity was cut off by a budget.
struct Unavailable;

impl From<Error> for Unavailable {
    fn from(_: Error) -> Self {
        Unavailable
    }
}

type Eval = std::result::Result<CheckOutcome, Unavailable>;

struct Ctx<'g> {
    g: &'g Graph,
    budget: Budget,
    spectrum: CycleSpectrum,
    chi: Option<(usize, ColoringCertificate)>,
    omega: (usize, VertexSet),
    critical: OnceCell<Option<bool>>,
    two_connected: OnceCell<bool>,
    three_connected: OnceCell<bool>,
}

impl Ctx<'_> {
    fn odd(&self) -> std::result::Result<&BTreeSet<usize>, Unavailable> {
        if self.spectrum.complete {
            Ok(&self.spectrum.odd_lengths)
        } else {
            Err(Unavailable)
        }
    }

    /// `Some((k, k + 2l))` when L(G) has exactly two elements.
    fn odd_pair(&self) -> std::result::Result<Option<(usize, usize)>, Unavailable> {
        let odd = self.odd()?;
        let v: Vec<usize> = odd.iter().copied().collect();
        Ok(match v[..] {
            [k, m] => Some((k, m)),
            _ => None,
        })
    }

    fn chi(&self) -> std::result::Result<usize, Unavailable> {
        self.chi.as_ref().map(|c| c.0).ok_or(Unavailable)
    }

    fn omega(&self) -> usize {
        self.omega.0
    }

    fn is_critical(&self) -> std::result::Result<bool, Unavailable> {
        let chi = self.chi()?;
        let budget = self.budget.solver_nodes;
        self.critical
            .get_or_init(|| criticality_given_chi(self.g, chi, budget).ok().map(|r| r.is_k_critical))
            .ok_or(Unavailable)
    }

    fn two_connected(&self) -> bool {
        *self.two_connected.get_or_init(|| is_two_connected(self.g))
    }

    fn three_connected(&self) -> bool {
        *self.three_connected.get_or_init(|| is_three_connected(self.g))
    }

    /// The hypothesis shared by both 4-critical lemmas.
    fn lemma_hypothesis(&self) -> std::result::Result<bool, Unavailable> {
        let Some((k, _)) = self.odd_pair()? else {
            return Ok(false);
        };
        Ok(k >= 5 && self.chi()? == 4 && self.is_critical()?)
    }

    fn chi_witness(&self, detail: String) -> Witness {
        let colors = self.chi.as_ref().map(|c| c.1.colors.clone()).unwrap_or_default();
        Witness::new(detail).colored(colors)
    }
}

fn gyarfas_bound(cx: &Ctx) -> Eval {
    let l = cx.odd()?.len();
    if l == 0 {
        return Ok(SKIP_HYPOTHESIS);
    }
    let chi = cx.chi()?;
    Ok(CheckOutcome::verdict(chi <= 2 * l + 2, || {
        cx.chi_witness(format!("chi = {chi} exceeds 2|L| + 2 = {}", 2 * l + 2))
    }))
}

fn gyarfas_equality(cx: &Ctx) -> Eval {
    let l = cx.odd()?.len();
    if l == 0 {
        return Ok(SKIP_HYPOTHESIS);
    }
    let chi = cx.chi()?;
    let target = 2 * l + 2;
    let block = block_decomposition(cx.g)
        .blocks
        .into_iter()
        .find(|&b| b.len() == target && cx.g.is_clique(b));
    Ok(CheckOutcome::verdict((chi == target) == block.is_some(), || match block {
        Some(b) => Witness::new(format!("block K{target} present but chi = {chi}")).on(b),
        None => cx.chi_witness(format!("chi = {chi} = 2|L| + 2 without a K{target} block")),
    }))
}

fn wang_single(cx: &Ctx) -> Eval {
    let odd = cx.odd()?;
    if odd.len() != 1 || *odd.first().expect("one length") < 5 {
        return Ok(SKIP_HYPOTHESIS);
    }
    let chi = cx.chi()?;
    Ok(CheckOutcome::verdict(chi == 3, || cx.chi_witness(format!("L = {odd:?} but chi = {chi}"))))
}

fn wang_35(cx: &Ctx) -> Eval {
    if cx.odd_pair()? != Some((3, 5)) {
        return Ok(SKIP_HYPOTHESIS);
    }
    let chi = cx.chi()?;
    let obstruction = find_k4(cx.g).or_else(|| find_w6(cx.g));
    let expected = match obstruction {
        None => 3,
        Some(_) => cx.omega().max(4),
    };
    Ok(CheckOutcome::verdict(chi == expected, || {
        Witness::new(format!("L = {{3, 5}}, expected chi = {expected}, found {chi}"))
            .on(obstruction.unwrap_or_default())
    }))
}

fn thm_3l(cx: &Ctx) -> Eval {
    match cx.odd_pair()? {
        Some((3, m)) if m >= 7 => {}
        _ => return Ok(SKIP_HYPOTHESIS),
    }
    let chi = cx.chi()?;
    let expected = cx.omega().max(3);
    Ok(CheckOutcome::verdict(chi == expected, || {
        cx.chi_witness(format!("expected chi = max(3, omega) = {expected}, found {chi}"))
    }))
}

fn thm_kl(cx: &Ctx) -> Eval {
    match cx.odd_pair()? {
        Some((k, _)) if k >= 5 => {}
        _ => return Ok(SKIP_HYPOTHESIS),
    }
    let chi = cx.chi()?;
    Ok(CheckOutcome::verdict(chi == 3, || cx.chi_witness(format!("expected chi = 3, found {chi}"))))
}

/// Every proper 3-coloring of a shortest odd cycle with `v0 -> 0, v1 -> 1`.
/// The others are color permutations of these and extend alike.
fn cycle_colorings(m: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = vec![0u8, 1];
    fn rec(m: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == m {
            if cur[m - 1] != cur[0] {
                out.push(cur.clone());
            }
            return;
        }
        for c in 0..3 {
            if c != *cur.last().expect("non-empty") {
                cur.push(c);
                rec(m, cur, out);
                cur.pop();
            }
        }
    }
    rec(m, &mut cur, &mut out);
    out
}

fn krs_extension(cx: &Ctx) -> Eval {
    if cx.odd()?.len() != 1 || cx.omega() >= 4 {
        return Ok(SKIP_HYPOTHESIS);
    }
    let cycle = shortest_odd_cycle(cx.g).expect("non-bipartite");
    for colors in cycle_colorings(cycle.len()) {
        let fixed: BTreeMap<usize, u8> = cycle.vertices().iter().copied().zip(colors.iter().copied()).collect();
        if extend_precoloring(cx.g, &fixed, 3)?.is_none() {
            let witness = Witness::new("proper 3-coloring of a shortest odd cycle does not extend")
                .on(cycle.vertices().iter().copied())
                .colored(colors);
            return Ok(CheckOutcome::Fail { witness });
        }
    }
    Ok(CheckOutcome::Pass)
}

fn nonseparating_exists(cx: &Ctx) -> Eval {
    if cx.g.is_bipartite().is_some() || !cx.three_connected() {
        return Ok(SKIP_HYPOTHESIS);
    }
    Ok(CheckOutcome::verdict(non_separating_induced_odd_cycle(cx.g).is_some(), || {
        Witness::new("3-connected non-bipartite graph without a non-separating induced odd cycle")
    }))
}

fn book_characterization(cx: &Ctx) -> Eval {
    if !cx.two_connected() || cx.odd()?.iter().ne([3].iter()) {
        return Ok(SKIP_HYPOTHESIS);
    }
    let ok = (cx.g.order() == 4 && cx.g.is_complete()) || detect_book(cx.g).is_some();
    Ok(CheckOutcome::verdict(ok, || Witness::new("2-connected with L = {3} but neither K4 nor a book")))
}

fn voss_two_diagonals(cx: &Ctx) -> Eval {
    if cx.omega() >= 4 || cx.chi()? < 4 {
        return Ok(SKIP_HYPOTHESIS);
    }
    Ok(CheckOutcome::verdict(odd_cycle_with_two_diagonals(cx.g).is_some(), || {
        cx.chi_witness("K4-free with chi >= 4 but no odd cycle has two diagonals".into())
    }))
}

fn lemma_3connected(cx: &Ctx) -> Eval {
    if !cx.lemma_hypothesis()? {
        return Ok(SKIP_HYPOTHESIS);
    }
    let kappa = vertex_connectivity(cx.g)?;
    Ok(CheckOutcome::verdict(kappa >= 3, || {
        let cut = two_separations(cx.g).first().map(|s| [s.cut.0, s.cut.1]);
        Witness::new(format!("4-critical with two odd lengths >= 5 and connectivity {kappa}"))
            .on(cut.into_iter().flatten())
    }))
}

fn lemma_intersect2(cx: &Ctx) -> Eval {
    if !cx.lemma_hypothesis()? {
        return Ok(SKIP_HYPOTHESIS);
    }
    let meet = min_pairwise_odd_cycle_intersection(cx.g, cx.budget.cycles)?;
    let min = meet.min.filter(|_| meet.complete).ok_or(Unavailable)?;
    Ok(CheckOutcome::verdict(min >= 2, || {
        Witness::new(format!("two odd cycles share only {min} vertices"))
    }))
}

fn dirac_2cut(cx: &Ctx) -> Eval {
    let g = cx.g;
    if g.order() < 4 || !cx.two_connected() || cx.three_connected() {
        return Ok(SKIP_HYPOTHESIS);
    }
    let chi = cx.chi()?;
    if chi < 3 || g.min_degree().unwrap_or(0) + 1 < chi || !cx.is_critical()? {
        return Ok(SKIP_HYPOTHESIS);
    }
    for sep in two_separations(g) {
        let check = dirac_decomposition_check(g, &sep)?;
        if !check.passed() {
            let witness = Witness::new(format!("2-cut decomposition fails: {check:?}")).on([sep.cut.0, sep.cut.1]);
            return Ok(CheckOutcome::Fail { witness });
        }
    }
    Ok(CheckOutcome::Pass)
}

fn evaluate(id: CheckId, cx: &Ctx) -> CheckOutcome {
    let f: fn(&Ctx) -> Eval = match id {
        CheckId::GyarfasBound => gyarfas_bound,
        CheckId::GyarfasEquality => gyarfas_equality,
        CheckId::WangSingle => wang_single,
        CheckId::Wang35 => wang_35,
        CheckId::Thm3l => thm_3l,
        CheckId::ThmKl => thm_kl,
        CheckId::KrsExtension => krs_extension,
        CheckId::NonseparatingExists => nonseparating_exists,
        CheckId::BookCharacterization => book_characterization,
        CheckId::VossTwoDiagonals => voss_two_diagonals,
        CheckId::Lemma3connected => lemma_3connected,
        CheckId::LemmaIntersect2 => lemma_intersect2,
        CheckId::Dirac2cut => dirac_2cut,
    };
    f(cx).unwrap_or(CheckOutcome::Skip { reason: SkipReason::Budget })
}

/// Computes L(G), χ and ω and evaluates every check.
pub fn analyze(g: &Graph, budget: Budget) -> Verdict {
    analyze_checks(g, &CheckId::all(), budget)
}

/// Like [`analyze`], restricted to `checks`.
pub fn analyze_checks(g: &Graph, checks: &BTreeSet<CheckId>, budget: Budget) -> Verdict {
    let cx = Ctx {
        g,
        budget,
        spectrum: cycle_lengths(g, budget.cycles),
        chi: chromatic_number_with_budget(g, budget.solver_nodes).ok(),
        omega: clique_number(g),
        critical: OnceCell::new(),
        two_connected: OnceCell::new(),
        three_connected: OnceCell::new(),
    };
    let checks = checks.iter().map(|&id| (id, evaluate(id, &cx))).collect();
    Verdict {
        graph6: to_graph6(g).expect("graph order is within graph6 range"),
        n: g.order(),
        edge_count: g.size(),
        chi: cx.chi().ok(),
        omega: cx.omega(),
        spectrum: cx.spectrum,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{named_graph, NamedGraphId};

    fn verdict(id: NamedGraphId) -> Verdict {
        analyze(&named_graph(id).unwrap(), Budget::default())
    }

    fn status(v: &Verdict, id: CheckId) -> &CheckOutcome {
        &v.checks[&id]
    }

    #[test]
    fn check_names_round_trip() {
        for id in CheckId::ALL {
            assert_eq!(id.name().parse::<CheckId>().unwrap(), id);
            assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{}\"", id.name()));
        }
        assert_eq!(CheckId::parse_list("all").unwrap().len(), 13);
        assert!(CheckId::parse_list("gyarfas_bound,nope").is_err());
    }

    #[test]
    fn petersen() {
        let v = verdict(NamedGraphId::Petersen);
        assert_eq!((v.chi, v.omega), (Some(3), 2));
        assert_eq!(v.spectrum.odd_lengths, BTreeSet::from([5, 9]));
        assert_eq!(status(&v, CheckId::ThmKl), &CheckOutcome::Pass);
        assert_eq!(status(&v, CheckId::NonseparatingExists), &CheckOutcome::Pass);
        assert!(!v.has_failure());
    }

    #[test]
    fn groetzsch() {
        let v = verdict(NamedGraphId::Groetzsch);
        assert_eq!(v.chi, Some(4));
        assert_eq!(v.spectrum.odd_lengths, BTreeSet::from([5, 7, 9, 11]));
        assert_eq!(status(&v, CheckId::GyarfasBound), &CheckOutcome::Pass);
        assert_eq!(status(&v, CheckId::ThmKl), &SKIP_HYPOTHESIS);
        assert_eq!(status(&v, CheckId::VossTwoDiagonals), &CheckOutcome::Pass);
        assert!(!v.has_failure());
    }

    #[test]
    fn k4() {
        let v = verdict(NamedGraphId::Complete(4));
        assert_eq!(status(&v, CheckId::Thm3l), &SKIP_HYPOTHESIS);
        assert_eq!(status(&v, CheckId::WangSingle), &SKIP_HYPOTHESIS);
        assert_eq!(status(&v, CheckId::GyarfasEquality), &CheckOutcome::Pass);
        assert_eq!(status(&v, CheckId::BookCharacterization), &CheckOutcome::Pass);
        assert!(!v.has_failure());
    }

    #[test]
    fn four_spoke_wheel() {
        let v = verdict(NamedGraphId::Wheel(5));
        assert_eq!(v.spectrum.odd_lengths, BTreeSet::from([3, 5]));
        assert_eq!(status(&v, CheckId::Wang35), &CheckOutcome::Pass);
    }

    #[test]
    fn budget_skips_are_not_passes() {
        let g = named_graph(NamedGraphId::Groetzsch).unwrap();
        let v = analyze(&g, Budget { cycles: 3, solver_nodes: DEFAULT_NODE_BUDGET });
        assert!(!v.spectrum.complete);
        for id in [CheckId::GyarfasBound, CheckId::ThmKl, CheckId::KrsExtension] {
            assert_eq!(status(&v, id), &CheckOutcome::Skip { reason: SkipReason::Budget });
        }
        let v = analyze(&g, Budget { cycles: DEFAULT_CYCLE_BUDGET, solver_nodes: 2 });
        assert_eq!(v.chi, None);
        assert_eq!(status(&v, CheckId::GyarfasBound), &CheckOutcome::Skip { reason: SkipReason::Budget });
    }

    #[test]
    fn cycle_colorings_are_proper() {
        let all = cycle_colorings(5);
        // C5 has 30 proper 3-colorings, a sixth of them fix v0 and v1.
        assert_eq!(all.len(), 5);
        for c in all {
            assert!((0..5).all(|i| c[i] != c[(i + 1) % 5]));
        }
    }
}
