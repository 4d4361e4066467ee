//! Binary-string avoidance: padded strings, multi-pattern matching,
//! unavoidability decisions with a brute-force oracle, the strand/string
//! correspondence, and the tasselled decision for finite graph families.

pub mod avoid;
pub mod bitstring;
pub mod matcher;
pub mod necks;
pub mod tasselled;

pub use avoid::{
    brute_force_unavoidable, minimal_c, unavoidable, AvoidVerdict, PatternSet, BRUTE_MAX_S,
};
pub use bitstring::BitString;
pub use matcher::PatternMatcher;
pub use necks::{necks_of, string_of_strand, strings_of_neck};
pub use tasselled::{
    h_ab_family, is_bad_string, padded_patterns, preprocess_family, tassel_covered, tassel_oracle,
    tasselled_decide, tasselled_search, FamilyPatterns, OracleOutcome, TasselledSearch,
    TasselledVerdict, MASK_WIDTH_CAP, ORACLE_LEN_CAP,
};
