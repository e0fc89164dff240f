//! Stable ranges, weights, transfer conditions between bases, and Schur
//! range certification from monomial data.

pub mod kvec;
pub mod range;
pub mod sequence;
pub mod table;
pub mod transfer;

pub use kvec::{kvec_lemma_check, KvecOutcome};
pub use range::{
    char_stability, coefficient_report, coefficient_stab_n, monomial_report, observe, observed_range, padded_entry,
    schur_range_from_monomial, schur_report, weight, Observed, RangeEntry, StabilityReport, UniformRange,
    WeightObservation,
};
pub use sequence::SymFuncSequence;
pub use table::Table;
pub use transfer::{
    check_transfer_conditions, expected_verdicts, table1, table1_table, CellStatus, ConditionVerdict,
    TransferConditionReport, Witness,
};
