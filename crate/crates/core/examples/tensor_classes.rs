//! Symmetry classes of tensors: dimensions per character and the
//! orthogonal-basis verdict.

use symclass::dicyclic::{brauer_characters, character_table, DicyclicGroup};
use symclass::obasis::decide_obasis;
use symclass::orbits::Space;

fn main() -> symclass::Result<()> {
    let group = DicyclicGroup::new(2)?;
    let space = Space::Tensor { dim: 2 };
    let mut chars = character_table(&group)?;
    chars.extend(brauer_characters(&group, 3)?);
    let mut total = 0;
    for chi in &chars {
        let report = decide_obasis(&group, space, chi)?;
        if !chi.is_brauer() {
            total += report.dimension;
        }
        let hat = if chi.is_brauer() { " (p=3)" } else { "" };
        println!("{:>6}{hat:<6} dim {:>3}  o*-basis {}", chi.label(), report.dimension, report.verdict);
    }
    println!("ordinary classes sum to {total} = 2^{}", group.order());
    Ok(())
}
