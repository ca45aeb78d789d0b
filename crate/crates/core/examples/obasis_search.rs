//! Decide whether a symmetry class of quadratic polynomials has an
//! orthogonal basis of symmetrized monomials.

use symclass::dicyclic::{brauer_degree_two, degree_two_character, DicyclicGroup};
use symclass::obasis::decide_obasis;
use symclass::orbits::Space;

fn main() -> symclass::Result<()> {
    let d2 = Space::Polynomial { degree: 2 };
    for n in [2, 3, 4] {
        let group = DicyclicGroup::new(n)?;
        for h in 1..n {
            let report = decide_obasis(&group, d2, &degree_two_character(&group, h)?)?;
            println!("n={n} chi:{h}  dim {:>3}  o-basis {}", report.dimension, report.verdict);
        }
    }
    let group = DicyclicGroup::new(3)?;
    let report = decide_obasis(&group, d2, &brauer_degree_two(&group, 3, 1)?)?;
    println!("n=3 p=3 chi-hat:1  dim {:>3}  o-basis {}", report.dimension, report.verdict);
    for orbit in report.orbits.iter().filter(|o| o.rank > 0) {
        let witness: Vec<String> = orbit.witness.iter().flatten().map(ToString::to_string).collect();
        println!("  {:?} rank {} witness [{}]", orbit.representative, orbit.rank, witness.join(", "));
    }
    Ok(())
}
