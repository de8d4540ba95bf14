//! The acceptance suite: numbered criteria, each a fixed list of jobs.

use super::{default_instances, Instance};

pub struct Criterion {
    pub number: u8,
    pub title: &'static str,
    pub cases: &'static [&'static str],
}

pub const CRITERIA: &[Criterion] = &[
    Criterion { number: 1, title: "thm_a, odd n in 3..21", cases: &["thm_a"] },
    Criterion { number: 2, title: "thm_b, odd n in 3..15", cases: &["thm_b"] },
    Criterion { number: 3, title: "thm_c on the (d,m,r) grid", cases: &["thm_c"] },
    Criterion { number: 4, title: "thm_d, thm_e, thm_f over Q(a)", cases: &["thm_d", "thm_e", "thm_f"] },
    Criterion {
        number: 5,
        title: "multi-parameter congruences, n <= 11",
        cases: &["wei_o", "wei_ff", "lemma_c", "nw_general", "lemma_d_units", "beta_antisym", "gs_reflection"],
    },
    Criterion { number: 6, title: "classical identities", cases: &["watson", "saalschutz", "sears", "relation_id"] },
    Criterion {
        number: 7,
        title: "introductory q-congruences",
        cases: &["guo_li_c2", "song_wang", "guo_li_long", "van_hamme_c2_q", "van_hamme_d2_q", "long_q"],
    },
    Criterion { number: 9, title: "lemma property suites", cases: &["lemma_a_prop", "lemma_b_prop", "lemma_e_prop"] },
    Criterion { number: 10, title: "numeric corollaries", cases: &["cor_a", "cor_b", "cor_c", "cor_d", "cor_e"] },
    Criterion {
        number: 11,
        title: "classical supercongruences",
        cases: &["van_hamme_c2", "long", "van_hamme_d2", "van_hamme_d2_strong"],
    },
    Criterion { number: 12, title: "limit formulas", cases: &["limit_lambda", "limit_pair", "limit_family"] },
];

/// `wei_o` at a composite `n` whose prime factor appears squared in the
/// denominators of its right side; see [`excluded`].
const WEI_O_COMPOSITE: u64 = 9;

/// Instances of a case that belong to a criterion.
pub fn instances(criterion: u8, id: &str) -> Vec<Instance> {
    let all = match (criterion, id) {
        (5, "wei_o") => [3, 5, 7, WEI_O_COMPOSITE, 11].map(Instance::n).to_vec(),
        _ => default_instances(id),
    };
    match criterion {
        5 => all.into_iter().filter(|i| i.n.is_none_or(|n| n <= 11) && !excluded(id, i)).collect(),
        _ => all,
    }
}

/// Instances left out of criterion 5 because the statement itself has a
/// pole there, not because the engine cannot decide them.
pub fn excluded(id: &str, inst: &Instance) -> bool {
    id == "wei_o" && inst.n == Some(WEI_O_COMPOSITE)
}

pub fn jobs(c: &Criterion) -> Vec<(String, Instance)> {
    c.cases.iter().flat_map(|id| instances(c.number, id).into_iter().map(move |i| (id.to_string(), i))).collect()
}

/// Every job of every criterion, in criterion order.
pub fn suite() -> Vec<(String, Instance)> {
    CRITERIA.iter().flat_map(jobs).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn criterion_grids() {
        let c = |n: u8| CRITERIA.iter().find(|c| c.number == n).unwrap();
        assert_eq!(jobs(c(1)).len(), 10);
        assert_eq!(jobs(c(2)).len(), 7);
        assert_eq!(jobs(c(3)).len(), 12);
        assert_eq!(jobs(c(4)).len(), 4 + 3 + 2);
        assert!(jobs(c(5)).iter().all(|(id, i)| !excluded(id, i)));
        assert!(jobs(c(5)).iter().any(|(id, i)| id == "wei_o" && i.n == Some(11)));
    }
}
