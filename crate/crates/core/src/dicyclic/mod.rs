//! The dicyclic group `T_{4n}`, its character tables and Brauer characters.

mod character;
mod group;

pub use character::{
    brauer_characters, brauer_degree_two, brauer_linear, character_table, cyclic_character, decompose,
    degree_two_character, inner_on, linear_character, trivial_multiplicity, CharacterFn, CharacterKind,
    CharacterSelector, PrimeSplit,
};
pub use group::{is_prime, DicyclicElement, DicyclicGroup};
