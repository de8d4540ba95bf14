//! Every displayed statement, keyed by its label, with the case that
//! checks it or the reason it has none.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    Case(&'static str),
    Cases(&'static [&'static str]),
    OutOfScope(&'static str),
}

pub const MANIFEST: &[(&str, Coverage)] = &[
    ("van-hamme-a", Coverage::Case("van_hamme_c2")),
    ("van-hamme-b", Coverage::Case("van_hamme_d2")),
    ("long", Coverage::Case("long")),
    ("guo-wang display", Coverage::Case("van_hamme_c2_q")),
    ("wei (q^2;q^3) display", Coverage::Cases(&["van_hamme_d2_q", "van_hamme_d2_strong"])),
    ("wei long display", Coverage::Case("long_q")),
    ("guo-li-a", Coverage::Case("guo_li_c2")),
    ("guo-li-b", Coverage::Case("guo_li_long")),
    ("Song-Wang", Coverage::Case("song_wang")),
    ("remark on d=q", Coverage::Case("songwang_pole_diagnostic")),
    ("wei-a", Coverage::Case("thm_a")),
    ("cor-a", Coverage::Case("cor_a")),
    ("wei-b", Coverage::Cases(&["thm_b", "songwang_conjecture"])),
    ("cor-b", Coverage::Case("cor_b")),
    ("wei-c", Coverage::Case("thm_c")),
    ("cor-c", Coverage::Case("cor_c")),
    ("cor-d", Coverage::Case("cor_d")),
    ("cor-e", Coverage::Case("cor_e")),
    ("lemma-a", Coverage::Case("lemma_a_prop")),
    ("lemma-b", Coverage::Case("lemma_b_prop")),
    ("wei-d", Coverage::Case("thm_d")),
    ("wei-e", Coverage::Case("gs_reflection")),
    ("wei-f", Coverage::Case("beta_antisym")),
    ("wei-g", Coverage::Case("gs_reflection_b")),
    ("wei-h", Coverage::Case("beta_antisym")),
    ("wei-i", Coverage::Case("wei_i")),
    ("wei-j", Coverage::Case("wei_j")),
    ("root of unity evaluation for wei-j", Coverage::OutOfScope("argument about values at roots of unity; its conclusion is wei-j")),
    ("phi series definition", Coverage::OutOfScope("definition; realized by the truncated series evaluator")),
    ("watson", Coverage::Case("watson")),
    ("watson specialization at a = q^n", Coverage::OutOfScope("finite specialization feeding wei-m; wei-m is checked directly")),
    ("wei-m", Coverage::Case("wei_m")),
    ("wei-n", Coverage::Case("wei_n")),
    ("two-parameter unit relations", Coverage::Case("lemma_d_units")),
    ("wei-o", Coverage::Case("wei_o")),
    ("wei-p", Coverage::Case("wei_p")),
    ("saal", Coverage::Case("saalschutz")),
    ("saal specialization", Coverage::OutOfScope("terminating instance of saal; wei-q is checked directly")),
    ("wei-q", Coverage::Case("wei_q")),
    ("wei-r", Coverage::Case("wei_r")),
    ("relation", Coverage::Case("relation_id")),
    ("limit in the proof of wei-a", Coverage::Case("limit_lambda")),
    ("lemma-c", Coverage::Case("lemma_c")),
    ("NW-a", Coverage::Case("nw_general")),
    ("lemma-d", Coverage::Case("lemma_d_units")),
    ("wei-aa", Coverage::Case("thm_e")),
    ("wei-bb", Coverage::Case("wei_bb")),
    ("wei-cc", Coverage::Case("wei_cc")),
    ("wei-dd", Coverage::Case("wei_dd")),
    ("wei-ee", Coverage::Case("wei_ee")),
    ("wei-ff", Coverage::Case("wei_ff")),
    ("wei-gg", Coverage::Case("wei_gg")),
    ("Sear", Coverage::Case("sears")),
    ("wei-hh", Coverage::Case("wei_hh")),
    ("wei-ii", Coverage::Case("wei_ii")),
    ("limit in the proof of wei-b", Coverage::Case("limit_pair")),
    ("lemma-e", Coverage::Case("lemma_e_prop")),
    ("lemma-f", Coverage::Case("lemma_f")),
    ("wei-aaa", Coverage::Case("thm_f")),
    ("wei-bbb", Coverage::Case("wei_bbb")),
    ("wei-ccc", Coverage::Case("wei_ccc")),
    ("wei-ddd", Coverage::Case("wei_ddd")),
    ("wei-eee", Coverage::Case("wei_eee")),
    ("wei-fff", Coverage::Case("wei_fff")),
    ("wei-ggg", Coverage::Case("wei_ggg")),
    ("wei-hhh", Coverage::Case("wei_hhh")),
    ("wei-iii", Coverage::Case("wei_iii")),
    ("limit in the proof of wei-c", Coverage::Case("limit_family")),
];

/// Anchors whose case ids are missing from the catalog.
pub fn unmapped() -> Vec<&'static str> {
    let ids: Vec<&str> = super::list_cases().iter().map(|c| c.id).collect();
    MANIFEST
        .iter()
        .filter(|(_, c)| match c {
            Coverage::Case(id) => !ids.contains(id),
            Coverage::Cases(xs) => xs.iter().any(|id| !ids.contains(id)),
            Coverage::OutOfScope(_) => false,
        })
        .map(|(a, _)| *a)
        .collect()
}
