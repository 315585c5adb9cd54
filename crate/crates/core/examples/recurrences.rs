use embdist::distributions::cn2_recurrences;
use embdist::known;
use embdist::Mode;

fn main() -> embdist::Result<()> {
    let computed = cn2_recurrences(Mode::Genus, 12)?;
    let listed = known::genus_c2()?;
    for (n, p) in computed.iter().enumerate() {
        let mark = match listed.get(n) {
            Some(q) if q == p => "listed",
            Some(_) => "DIFFERS",
            None => "",
        };
        println!("{:>2}  {mark:<7} {p}", n + 1);
    }
    Ok(())
}
