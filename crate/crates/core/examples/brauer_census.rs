//! p-regular elements, p-regular classes and irreducible Brauer characters.

use symclass::dicyclic::{brauer_characters, DicyclicGroup, PrimeSplit};

fn main() -> symclass::Result<()> {
    println!("{:>3} {:>3} {:>4} {:>4} {:>8} {:>8}  characters", "n", "p", "l", "eps", "classes", "brauer");
    for n in 2..=6 {
        let group = DicyclicGroup::new(n)?;
        for p in [2, 3, 5, 7] {
            let split = PrimeSplit::new(n, p)?;
            let classes = group.p_regular_classes(p)?;
            let chars = brauer_characters(&group, p)?;
            let labels: Vec<&str> = chars.iter().map(|c| c.label()).collect();
            println!(
                "{n:>3} {p:>3} {:>4} {:>4} {:>8} {:>8}  {}",
                split.l,
                split.epsilon(),
                classes.len(),
                chars.len(),
                labels.join(" ")
            );
        }
    }
    Ok(())
}
