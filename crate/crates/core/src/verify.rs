//! Randomized cross-check suites: each sample pits a specialised algorithm
//! or a gadget against an independent exhaustive oracle.
//!
//! Samples are drawn from per-index seeds, run in parallel and reported in
//! index order, so a report is a pure function of the configuration.

use std::fmt::Write as _;
use std::time::Duration;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::generate;
use crate::outforest::{decide_i_perfect_min_arcs, max_i_perfect, semicomplete_i_perfect, verify_out_forest};
use crate::reductions::{
    build_linkage_kappa_gadget, build_nae_gadget, forest_from_assignment, oracle_2linkage, oracle_nae3sat,
    split_vertices, to_one_perfect_gadget, LinkageInstance, OnePerfectMode,
};
use crate::steiner::{pack_cycles, DisjointMode, DEFAULT_CAP};
use crate::symmetric::symmetric_kappa_at_least;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    /// Semicomplete matching algorithm against the exact forest search.
    SemicompleteForest,
    /// NAE oracle against the two-tree perfect forest decision.
    NaeGadget,
    /// NAE oracle against the add-source 1-perfect decision.
    NaeOnePerfect,
    /// 2-linkage oracle against internally disjoint packing on the gadget.
    LinkageKappa,
    /// Internal packing on the gadget against arc packing after splitting.
    LinkageSplit,
    /// Partition/skeleton decision against exhaustive packing.
    SymmetricKappa,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::SemicompleteForest,
        Suite::NaeGadget,
        Suite::NaeOnePerfect,
        Suite::LinkageKappa,
        Suite::LinkageSplit,
        Suite::SymmetricKappa,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::SemicompleteForest => "thmA-b",
            Suite::NaeGadget => "thmB",
            Suite::NaeOnePerfect => "thmC",
            Suite::LinkageKappa => "thm1a",
            Suite::LinkageSplit => "thm1d",
            Suite::SymmetricKappa => "thm1c",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    /// Default size cap: vertices, or variables for the CNF suites.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::SemicompleteForest | Suite::SymmetricKappa => 8,
            Suite::NaeGadget | Suite::NaeOnePerfect => 4,
            Suite::LinkageKappa | Suite::LinkageSplit => 6,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub samples: usize,
    pub seed: u64,
    /// Largest instance drawn; `None` uses the suite default.
    pub max_n: Option<usize>,
    /// Allowance for each sample, started when the sample starts.
    pub per_sample: Option<Duration>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Agree,
    Disagree(String),
    Timeout,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleResult {
    pub index: usize,
    pub instance: String,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub suite: Suite,
    pub results: Vec<SampleResult>,
}

impl VerifyReport {
    pub fn agreements(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Agree))
    }

    pub fn disagreements(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Disagree(_)))
    }

    pub fn timeouts(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Timeout))
    }

    fn count(&self, f: impl Fn(&Outcome) -> bool) -> usize {
        self.results.iter().filter(|r| f(&r.outcome)).count()
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {}/{} agreements, {} disagreements, {} timeouts",
            self.suite.name(),
            self.agreements(),
            self.results.len(),
            self.disagreements(),
            self.timeouts()
        )
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.results {
            let verdict = match &r.outcome {
                Outcome::Agree => "agree".to_string(),
                Outcome::Disagree(why) => format!("DISAGREE ({why})"),
                Outcome::Timeout => "timeout".to_string(),
            };
            let _ = writeln!(s, "sample {} {}: {verdict}", r.index, r.instance);
        }
        s.push_str(&self.summary());
        s.push('\n');
        s
    }
}

/// Seed for sample `index`, decorrelated from neighbouring indices.
pub fn sample_seed(seed: u64, index: usize) -> u64 {
    let mut z = seed ^ (index as u64).wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> VerifyReport {
    let max_n = cfg.max_n.unwrap_or_else(|| suite.default_max_n());
    let results = (0..cfg.samples)
        .into_par_iter()
        .map(|index| {
            let budget = cfg.per_sample.map_or_else(Budget::unlimited, Budget::from_duration);
            let mut rng = generate::rng(sample_seed(cfg.seed, index));
            let (instance, res) = match suite {
                Suite::SemicompleteForest => semicomplete_sample(&mut rng, max_n, budget),
                Suite::NaeGadget => nae_sample(&mut rng, max_n, false, budget),
                Suite::NaeOnePerfect => nae_sample(&mut rng, max_n, true, budget),
                Suite::LinkageKappa => linkage_sample(&mut rng, max_n, false, budget),
                Suite::LinkageSplit => linkage_sample(&mut rng, max_n, true, budget),
                Suite::SymmetricKappa => symmetric_sample(&mut rng, max_n, budget),
            };
            let outcome = match res {
                Ok(None) => Outcome::Agree,
                Ok(Some(why)) => Outcome::Disagree(why),
                Err(Error::BudgetExceeded) => Outcome::Timeout,
                Err(e) => Outcome::Disagree(format!("error: {e}")),
            };
            SampleResult { index, instance, outcome }
        })
        .collect();
    VerifyReport { suite, results }
}

/// `Ok(None)` on agreement, `Ok(Some(reason))` on a disagreement.
type Check = Result<Option<String>>;

fn semicomplete_sample(rng: &mut impl Rng, max_n: usize, budget: Budget) -> (String, Check) {
    let n = rng.random_range(1..=max_n.max(1));
    let p = [0.0, 0.2, 0.5][rng.random_range(0..3)];
    let d = generate::random_semicomplete(rng, n, p);
    let desc = format!("n={n} arcs={}", d.arc_count());
    let check = || -> Check {
        for i in 0..2 {
            let fast = semicomplete_i_perfect(&d, i)?;
            let exact = max_i_perfect(&d, i, budget)?;
            if fast.is_some() != exact.is_some() {
                return Ok(Some(format!(
                    "i={i}: semicomplete says {}, exact says {}",
                    fast.is_some(),
                    exact.is_some()
                )));
            }
            if let Some(f) = &fast {
                if !verify_out_forest(&d, f)?.is_i_perfect(i) {
                    return Ok(Some(format!("i={i}: semicomplete certificate fails verification")));
                }
            }
        }
        Ok(None)
    };
    (desc, check())
}

fn nae_sample(rng: &mut impl Rng, max_n: usize, one_perfect: bool, budget: Budget) -> (String, Check) {
    let vars = rng.random_range(3..=max_n.max(3));
    let clauses = rng.random_range(1..=3);
    let inst = generate::random_cnf(rng, vars, clauses);
    let desc = format!("vars={vars} clauses={clauses}");
    let check = || -> Check {
        let oracle = oracle_nae3sat(&inst, budget)?;
        let g = build_nae_gadget(&inst)?;
        let (d, i) = if one_perfect {
            let x = g.vertex("x^1_1").ok_or_else(|| Error::MissingLabels("x^1_1".into()))?;
            (to_one_perfect_gadget(&g.digraph, OnePerfectMode::AddSource(x))?, 1)
        } else {
            (g.digraph.clone(), 0)
        };
        let n = d.vertex_count();
        let forest = decide_i_perfect_min_arcs(&d, i, n - 2, budget)?;
        if oracle.is_some() != forest.is_some() {
            return Ok(Some(format!("oracle says {}, forest search says {}", oracle.is_some(), forest.is_some())));
        }
        if let (Some(a), false) = (&oracle, one_perfect) {
            forest_from_assignment(&inst, a, &g)?;
        }
        Ok(None)
    };
    (desc, check())
}

fn linkage_instance(rng: &mut impl Rng, max_n: usize) -> (String, LinkageInstance) {
    let n = rng.random_range(4..=max_n.max(4));
    let h = generate::random_eulerian(rng, n);
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(rng);
    let t = [verts[0], verts[1], verts[2], verts[3]];
    let desc = format!("n={n} arcs={} terminals={t:?}", h.arc_count());
    (desc, LinkageInstance::new(h, t).expect("distinct terminals"))
}

fn linkage_sample(rng: &mut impl Rng, max_n: usize, split: bool, budget: Budget) -> (String, Check) {
    let (desc, link) = linkage_instance(rng, max_n);
    let check = || -> Check {
        if split {
            let g = build_linkage_kappa_gadget(&link, 2, 2)?;
            let s = g.terminal_set.clone().expect("gadget terminals");
            let kappa = decided(pack_cycles(&g.digraph, &s, DisjointMode::Internal, Some(2), DEFAULT_CAP, budget)?)?;
            let sp = split_vertices(&g)?;
            let ss = sp.terminal_set.clone().expect("gadget terminals");
            let lambda = decided(pack_cycles(&sp.digraph, &ss, DisjointMode::Arc, Some(2), DEFAULT_CAP, budget)?)?;
            return Ok((kappa != lambda).then(|| format!("kappa>=2 is {kappa}, lambda>=2 after split is {lambda}")));
        }
        let linked = oracle_2linkage(&link, budget)?.is_some();
        for (k, l) in [(2, 1), (2, 2), (3, 1)] {
            let g = build_linkage_kappa_gadget(&link, k, l)?;
            let s = g.terminal_set.clone().expect("gadget terminals");
            let packed = decided(pack_cycles(&g.digraph, &s, DisjointMode::Internal, Some(l), DEFAULT_CAP, budget)?)?;
            if packed != linked {
                return Ok(Some(format!("k={k} l={l}: linkage {linked}, packing {packed}")));
            }
        }
        Ok(None)
    };
    (desc, check())
}

/// The yes/no answer of a packing certificate with a target; budget and
/// cap exhaustion surface as timeouts.
fn decided(c: crate::steiner::PackingCertificate) -> Result<bool> {
    c.meets_target().ok_or(Error::BudgetExceeded)
}

fn symmetric_sample(rng: &mut impl Rng, max_n: usize, budget: Budget) -> (String, Check) {
    let n = rng.random_range(2..=max_n.max(2));
    let p = [0.2, 0.4, 0.7][rng.random_range(0..3)];
    let d = generate::random_connected_symmetric(rng, n, p);
    let k = if n >= 3 { rng.random_range(2..=3) } else { 2 };
    let l = rng.random_range(1..=2);
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(rng);
    let mut s = verts[..k].to_vec();
    s.sort_unstable();
    let desc = format!("n={n} edges={} S={s:?} l={l}", d.arc_count() / 2);
    let check = || -> Check {
        let fast = symmetric_kappa_at_least(&d, &s, l, budget)?;
        let brute = decided(pack_cycles(&d, &s, DisjointMode::Internal, Some(l), DEFAULT_CAP, budget)?)?;
        if fast.is_some() != brute {
            return Ok(Some(format!("decision says {}, exhaustive packing says {brute}", fast.is_some())));
        }
        Ok(None)
    };
    (desc, check())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(samples: usize) -> VerifyConfig {
        VerifyConfig { samples, seed: 1, max_n: None, per_sample: Some(Duration::from_secs(30)) }
    }

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert_eq!(Suite::from_name("thmZ"), None);
    }

    #[test]
    fn every_suite_agrees_on_a_few_samples() {
        for s in Suite::ALL {
            let r = run_suite(s, &cfg(4));
            assert_eq!(r.agreements(), 4, "{}", r.to_text());
        }
    }

    #[test]
    fn report_is_deterministic() {
        let a = run_suite(Suite::SymmetricKappa, &cfg(6)).to_text();
        let b = run_suite(Suite::SymmetricKappa, &cfg(6)).to_text();
        assert_eq!(a, b);
        assert!(a.ends_with("thm1c: 6/6 agreements, 0 disagreements, 0 timeouts\n"));
    }
}
