//! Exact Gram matrix of the symmetrized monomials over one orbit, computed
//! in closed form and by expanding the vectors.

use symclass::dicyclic::{degree_two_character, DicyclicGroup};
use symclass::orbits::{OrbitData, Space};
use symclass::symmetrize::{gram_matrix_closed, gram_matrix_direct};

fn main() -> symclass::Result<()> {
    let group = DicyclicGroup::new(3)?;
    let chi = degree_two_character(&group, 1)?;
    let mut alpha = vec![0; group.order()];
    alpha[0] = 2;
    let orbit = OrbitData::of(&group, Space::Polynomial { degree: 2 }, &alpha)?;
    let closed = gram_matrix_closed(&orbit, &chi);
    assert_eq!(closed, gram_matrix_direct(&orbit, &chi));
    println!("orbit of {:?} under {}, {} translates", orbit.representative, chi.label(), orbit.size());
    for row in &closed {
        let cells: Vec<String> = row.iter().map(|z| format!("{:>6}", z.to_string())).collect();
        println!("{}", cells.join(" "));
    }
    Ok(())
}
