use super::{CaseInfo, CaseKind, Instance, Mode, Schema};

use CaseKind::*;
use Mode::*;
use Schema::*;

#[allow(clippy::too_many_arguments)]
const fn case(
    id: &'static str,
    kind: CaseKind,
    mode: Mode,
    schema: Schema,
    anchor: &'static str,
    target: &'static str,
    needs: &'static str,
) -> CaseInfo {
    CaseInfo { id, kind, mode, schema, anchor, target, needs, experimental: false }
}

const fn experimental(mut c: CaseInfo) -> CaseInfo {
    c.experimental = true;
    c
}

const CASES: &[CaseInfo] = &[
    // classical q-analogues quoted in the introduction
    case("van_hamme_c2_q", Congruence, Exact, OddN, "guo-wang display", "[n]Phi_n^3", ""),
    case("van_hamme_d2_q", Congruence, Exact, NOneMod3, "wei (q^2;q^3) display", "[n]Phi_n^4", ""),
    case("long_q", Congruence, Exact, OddN, "wei long display", "[n]Phi_n^3", ""),
    case("guo_li_c2", Congruence, Exact, OddN, "guo-li-a", "[n]Phi_n^3", ""),
    case("guo_li_long", Congruence, Exact, OddN, "guo-li-b", "[n]Phi_n^2", ""),
    case("song_wang", Congruence, Exact, OddN, "Song-Wang", "[n]Phi_n^4", ""),
    experimental(case("songwang_conjecture", Congruence, Exact, OddN, "wei-b, conjectured modulus", "[n]^2Phi_n^4", "")),
    experimental(case("songwang_pole_diagnostic", Congruence, Exact, OddN, "remark on d=q", "[n]Phi_n^4", "")),
    // main theorems
    case("thm_a", Congruence, Exact, OddN, "wei-a", "[n]Phi_n^4", ""),
    case("thm_b", Congruence, Exact, OddN, "wei-b", "[n]Phi_n^5", ""),
    case("thm_c", Congruence, Exact, Dmrn, "wei-c", "Phi_n^6", ""),
    case("thm_d", Congruence, ExactOverQa, OddN, "wei-d", "[n]Phi_n^2(1-aq^n)(a-q^n)", "a"),
    case("thm_e", Congruence, ExactOverQa, OddN, "wei-aa", "[n]Phi_n^3(1-aq^n)(a-q^n)", "a"),
    case("thm_f", Congruence, ExactOverQa, Dmrn, "wei-aaa", "Phi_n^4(1-aq^n)(a-q^n)", "a"),
    // one and two parameter steps
    case("gs_reflection", Congruence, Sampled, OddN, "wei-e", "Phi_n", "a"),
    case("gs_reflection_b", Congruence, Sampled, OddN, "wei-g", "Phi_n", "a"),
    case("beta_antisym", Congruence, Sampled, OddN, "wei-f, wei-h", "Phi_n", "ab"),
    case("wei_i", Congruence, Sampled, OddN, "wei-i", "Phi_n", "ab"),
    case("wei_j", Congruence, Sampled, OddN, "wei-j", "[n]", "ab"),
    case("wei_m", Congruence, Sampled, OddN, "wei-m", "(1-aq^n)(a-q^n)", "ab"),
    case("wei_n", Congruence, Sampled, OddN, "wei-n", "(1-bq^n)(b-q^n)", "ab"),
    case("wei_o", Congruence, Sampled, OddN, "wei-o", "[n](1-aq^n)(a-q^n)(1-bq^n)(b-q^n)", "ab"),
    case("wei_p", Congruence, ExactOverQa, OddN, "wei-p", "[n]Phi_n^2(1-aq^n)(a-q^n)", "a"),
    case("wei_q", Congruence, ExactOverQa, OddN, "wei-q", "Phi_n", "a"),
    case("wei_r", Congruence, ExactOverQa, OddN, "wei-r", "[n]Phi_n^2(1-aq^n)(a-q^n)", "a"),
    // three parameters, d = 2
    case("lemma_c", Congruence, Sampled, OddN, "lemma-c", "[n]", "abc"),
    case("nw_general", Congruence, Sampled, Drn, "NW-a", "[n]", "abc"),
    case("wei_bb", Congruence, Sampled, OddN, "wei-bb", "[n]", "abc"),
    case("wei_cc", Congruence, Sampled, OddN, "wei-cc", "(1-aq^n)(a-q^n)", "abc"),
    case("wei_dd", Congruence, Sampled, OddN, "wei-dd", "(1-bq^n)(b-q^n)", "abc"),
    case("wei_ee", Congruence, Sampled, OddN, "wei-ee", "(c-q^n)", "abc"),
    case("wei_ff", Congruence, Sampled, OddN, "wei-ff", "[n](1-aq^n)(a-q^n)(1-bq^n)(b-q^n)(c-q^n)", "abc"),
    case("wei_gg", Congruence, ExactOverQa, OddN, "wei-gg", "[n]Phi_n^3(1-aq^n)(a-q^n)", "a"),
    case("wei_hh", Congruence, ExactOverQa, OddN, "wei-hh", "Phi_n^2", "a"),
    case("wei_ii", Congruence, ExactOverQa, OddN, "wei-ii", "[n]Phi_n^3(1-aq^n)(a-q^n)", "a"),
    // the residue-class family
    case("lemma_f", Congruence, Sampled, Dmrn, "lemma-f", "[n]", "abc"),
    case("wei_bbb", Congruence, Sampled, Dmrn, "wei-bbb", "Phi_n", "abc"),
    case("wei_ccc", Congruence, Sampled, Dmrn, "wei-ccc", "(1-aq^n)(a-q^n)", "abc"),
    case("wei_ddd", Congruence, Sampled, Dmrn, "wei-ddd", "(1-bq^n)(b-q^n)", "abc"),
    case("wei_eee", Congruence, Sampled, Dmrn, "wei-eee", "(c-q^n)", "abc"),
    case("wei_fff", Congruence, Sampled, Dmrn, "wei-fff", "Phi_n(1-aq^n)(a-q^n)(1-bq^n)(b-q^n)(c-q^n)", "abc"),
    case("wei_ggg", Congruence, ExactOverQa, Dmrn, "wei-ggg", "Phi_n^4(1-aq^n)(a-q^n)", "a"),
    case("wei_hhh", Congruence, ExactOverQa, Dmrn, "wei-hhh", "Phi_n^2", "a"),
    case("wei_iii", Congruence, ExactOverQa, Dmrn, "wei-iii", "Phi_n^4(1-aq^n)(a-q^n)", "a"),
    // identities
    case("watson", Identity, Sampled, Trunc, "watson", "8phi7 = 4phi3, terminating", "abcde"),
    case("saalschutz", Identity, Sampled, Trunc, "saal", "3phi2 = product, terminating", "abc"),
    case("sears", Identity, Sampled, Trunc, "Sear", "4phi3 = 4phi3, terminating", "abcde"),
    case("relation_id", Identity, Exact, Empty, "relation", "polynomial identity in a and X", ""),
    case("lemma_d_units", Identity, Sampled, Empty, "lemma-d and the two-parameter relations", "unit relations in X", "abc"),
    case("limit_lambda", Identity, Exact, OddN, "limit in the proof of wei-a", "a -> 1 limit", ""),
    case("limit_pair", Identity, Exact, OddN, "limit in the proof of wei-b", "a -> 1 limit", ""),
    case("limit_family", Identity, Exact, Dmrn, "limit in the proof of wei-c", "a -> 1 limit", ""),
    // properties of sequences
    case("lemma_a_prop", Property, Exact, OddN, "lemma-a", "random antisymmetric sequences", ""),
    case("lemma_b_prop", Property, Exact, Dmn, "lemma-b", "random sequences, both parts", ""),
    case("lemma_e_prop", Property, Exact, Dmrn, "lemma-e", "random sequences", ""),
    // q -> 1 specializations
    case("van_hamme_c2", Numeric, Exact, Ps, "van-hamme-a", "mod p^3", ""),
    case("van_hamme_d2", Numeric, Exact, Ps, "van-hamme-b", "mod p^4", ""),
    case("van_hamme_d2_strong", Numeric, Exact, Ps, "wei (q^2;q^3) display at q = 1", "mod p^6", ""),
    case("long", Numeric, Exact, Ps, "long", "mod p^3", ""),
    case("cor_a", Numeric, Exact, Ps, "cor-a", "mod p^{s+4}", ""),
    case("cor_b", Numeric, Exact, Ps, "cor-b", "mod p^{s+5}", ""),
    case("cor_c", Numeric, Exact, Pdmr, "cor-c", "mod p^{s+5}", ""),
    case("cor_d", Numeric, Exact, Ps, "cor-d", "mod p^6", ""),
    case("cor_e", Numeric, Exact, Ps, "cor-e", "mod p^6", ""),
];

pub fn list_cases() -> Vec<CaseInfo> {
    CASES.to_vec()
}

pub fn find_case(id: &str) -> Option<CaseInfo> {
    CASES.iter().find(|c| c.id == id).cloned()
}

fn odd(lo: u64, hi: u64) -> Vec<Instance> {
    (lo..=hi).filter(|n| n % 2 == 1).map(Instance::n).collect()
}

fn grid(xs: &[(u64, u64, u64, u64)]) -> Vec<Instance> {
    xs.iter().map(|&(d, m, r, n)| Instance::dmrn(d, m, r, n)).collect()
}

/// The representative `(d, m, r)` grid, each with its two smallest `n > r`.
pub const FAMILY_GRID: &[(u64, u64, u64, u64)] = &[
    (3, 2, 1, 4),
    (3, 2, 1, 7),
    (3, 3, 1, 4),
    (3, 3, 1, 7),
    (3, 2, 2, 5),
    (3, 2, 2, 8),
    (4, 2, 1, 5),
    (4, 2, 1, 9),
    (4, 3, 3, 7),
    (4, 3, 3, 11),
    (5, 2, 2, 7),
    (5, 2, 2, 12),
];

const SMALL_GRID: &[(u64, u64, u64, u64)] = &[(3, 2, 1, 4), (3, 2, 1, 7), (3, 3, 1, 4), (3, 2, 2, 5), (4, 2, 1, 5), (4, 3, 3, 7)];

fn numeric(pairs: &[(u64, u64)]) -> Vec<Instance> {
    pairs.iter().map(|&(p, s)| Instance::ps(p, s)).collect()
}

/// The instances a case runs on when none are given; together these form
/// the acceptance suite.
pub fn default_instances(id: &str) -> Vec<Instance> {
    match id {
        "thm_a" => odd(3, 21),
        "thm_b" => odd(3, 15),
        "thm_c" => grid(FAMILY_GRID),
        "thm_d" => odd(3, 9),
        "van_hamme_c2_q" | "long_q" | "guo_li_c2" | "guo_li_long" | "song_wang" => odd(3, 13),
        "van_hamme_d2_q" => [4, 7, 10, 13].map(Instance::n).to_vec(),
        "songwang_conjecture" => odd(3, 11),
        "songwang_pole_diagnostic" => odd(3, 7),
        "gs_reflection" | "gs_reflection_b" | "beta_antisym" | "lemma_c" | "lemma_a_prop" => odd(3, 11),
        "wei_i" | "wei_j" | "wei_m" | "wei_n" | "wei_o" => odd(3, 9),
        "thm_e" | "wei_p" | "wei_q" | "wei_r" | "wei_gg" | "wei_hh" | "wei_ii" | "limit_lambda" | "limit_pair" => odd(3, 7),
        "wei_bb" | "wei_cc" | "wei_dd" | "wei_ee" | "wei_ff" => odd(3, 7),
        "thm_f" => grid(&[(3, 2, 1, 4), (3, 2, 1, 7)]),
        "lemma_f" | "wei_bbb" | "wei_ccc" | "wei_ddd" | "wei_eee" | "wei_fff" | "wei_ggg" | "wei_hhh" | "wei_iii" => grid(SMALL_GRID),
        "limit_family" => grid(SMALL_GRID),
        "nw_general" => [(2, 1, 5), (2, 3, 7), (3, 1, 5), (3, 2, 7), (4, 3, 5), (5, 2, 7), (5, 4, 9)]
            .iter()
            .map(|&(d, r, n)| Instance { d: Some(d), r: Some(r), n: Some(n), ..Instance::default() })
            .collect(),
        "watson" | "saalschutz" | "sears" => (1..=5).map(Instance::trunc).collect(),
        "relation_id" | "lemma_d_units" => vec![Instance::default()],
        "lemma_b_prop" => [(2, 2, 5), (3, 2, 7), (3, 3, 7), (4, 2, 9), (4, 4, 9)]
            .iter()
            .map(|&(d, m, n)| Instance { d: Some(d), m: Some(m), n: Some(n), ..Instance::default() })
            .collect(),
        "lemma_e_prop" => grid(&[(3, 2, 2, 8), (4, 3, 3, 11), (5, 2, 2, 12), (3, 3, 1, 7)]),
        "van_hamme_c2" => numeric(&[(5, 1), (7, 1), (11, 1), (13, 1)]),
        "van_hamme_d2" => numeric(&[(7, 1), (13, 1), (19, 1)]),
        "van_hamme_d2_strong" | "cor_d" | "cor_e" => numeric(&[(7, 1), (13, 1)]),
        "long" => numeric(&[(5, 1), (7, 1), (11, 1)]),
        "cor_a" => numeric(&[(5, 1), (7, 1), (11, 1), (13, 1), (5, 2)]),
        "cor_b" => numeric(&[(3, 1), (5, 1), (7, 1), (11, 1)]),
        "cor_c" => [(3, 2, 1, 7), (3, 2, 1, 13), (3, 3, 1, 7), (3, 3, 1, 13), (3, 2, 2, 5), (3, 2, 2, 11), (4, 2, 1, 5), (4, 2, 1, 13), (4, 3, 3, 7), (4, 3, 3, 11), (5, 2, 2, 7)]
            .iter()
            .map(|&(d, m, r, p)| Instance { d: Some(d), m: Some(m), r: Some(r), p: Some(p), s: Some(1), n: None })
            .collect(),
        _ => Vec::new(),
    }
}
