use embdist::asympt::{normality_report, report_tsv, SeriesSource};
use embdist::distributions::cn2_recurrences;
use embdist::Mode;

fn main() -> embdist::Result<()> {
    let series = cn2_recurrences(Mode::Genus, 400)?;
    let rows = normality_report(&SeriesSource::Explicit(series), &[25, 50, 100, 200, 400], 0.25, 3.0 / 32.0)?;
    print!("{}", report_tsv(&rows));
    Ok(())
}
