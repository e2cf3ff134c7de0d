//! Structural properties of `L_n` beyond counting. Each submodule checks
//! one family of statements by exhaustive search at small `n`.

mod coatoms;
mod complements;
mod labeling;
mod modularity;

pub use coatoms::{
    coatom_progressions, coatoms, meet_of_coatoms_representation, representations_by_subset_search,
    structural_representation, SUBSET_SEARCH_LIMIT,
};
pub(crate) use coatoms::subsets_with_meet;
pub use complements::{
    complements_of, is_complemented, semicomplement_witness, uncomplemented_element, upper_semicomplements,
    SemicomplementWitness,
};
pub use labeling::{
    element_added_labeling, lex_preceq, verify_el_labeling, verify_er_labeling, EdgeLabeling, LabelingFailure,
    LabelingVerdict, PrefixTie, LABELING_BOUND,
};
pub use modularity::{
    check_comodernism, check_comodernism_with_bound, is_comodernistic, is_left_modular, is_left_modular_coatom,
    is_left_modular_in, witness_candidates, ComodernismReport, IntervalWitness, COMODERNISM_BOUND,
};
