//! Moduli, the congruence verdict for rational functions, the local-ring
//! fast path, parameter sampling and the `a -> 1` limit.

pub mod limit;
pub mod local;
pub mod modulus;
pub mod param;
pub mod sample;
pub mod verdict;

pub use limit::{hopital_limit2, AFrac};
pub use local::{judge, LocalOutcome, LocalRing, LocalVal};
pub use modulus::{admissible_sample, binomial_irreducible, build_modulus, ModFactor, ModulusSpec, ParamKind};
pub use sample::{sample_params, sample_tuples, ParamSample, DEFAULT_SEED};
pub use param::{verify_local_qa, SeriesRing, SplitRing};
pub use verdict::{
    atom_label, check_factor, congruent, reduce_mod, verify_factors, verify_local, CongruenceVerdict, FactorCheck, FactorRing,
    Sides,
};
