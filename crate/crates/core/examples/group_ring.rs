use embdist::groupring::GroupRingElem;
use embdist::poly::IntPoly;

fn main() -> embdist::Result<()> {
    let support = vec![1, 2, 3, 4];
    let x = IntPoly::x_pow(1);
    let a = GroupRingElem::from_label_cycles(support.clone(), &[vec![1, 2, 3]], IntPoly::one())?;
    let b = GroupRingElem::from_label_cycles(support.clone(), &[vec![3, 4]], x)?;

    let ab = a.multiply(&b)?;
    println!("a * b\n{}\n", ab.dump());
    println!("b * a\n{}\n", b.multiply(&a)?.dump());
    println!("a * b projected onto 1, 2, 3\n{}\n", ab.fproj(&[1, 2, 3])?.dump());
    println!("a^3\n{}", a.multiply(&a)?.multiply(&a)?.dump());
    Ok(())
}
