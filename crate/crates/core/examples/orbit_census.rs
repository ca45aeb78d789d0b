//! Orbits of T_{4n} on monomials of degree d and on basis tensors.

use symclass::dicyclic::DicyclicGroup;
use symclass::orbits::{orbit_reps, Space};

fn main() -> symclass::Result<()> {
    let group = DicyclicGroup::new(2)?;
    for space in [Space::Polynomial { degree: 2 }, Space::Polynomial { degree: 3 }, Space::Tensor { dim: 2 }] {
        let orbits: Vec<_> = orbit_reps(&group, space)?.collect();
        println!("{space:?}: {} tuples, {} orbits", space.tuple_count(group.order()), orbits.len());
        for orbit in &orbits {
            let stab: Vec<String> = orbit.stabilizer.iter().map(ToString::to_string).collect();
            println!("  {:?}  size {:>2}  stabilizer {{{}}}", orbit.representative, orbit.size(), stab.join(", "));
        }
    }
    Ok(())
}
