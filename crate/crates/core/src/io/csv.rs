use crate::error::{Error, Result};
use crate::methods::MethodId;
use crate::profile::Candidate;
use std::io::{Read, Write};

/// First line of every simulation CSV; bump the version on column changes.
pub const CSV_SCHEMA: &str = "# splitcycle simulation records v1";

pub const CSV_COLUMNS: [&str; 8] = ["model", "candidates", "voters", "trial", "method", "winner_count", "winners", "seed"];

/// One method's result on one simulated election.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimRecord {
    pub model: String,
    pub candidates: usize,
    /// Empty for the limit model.
    pub voters: Option<u64>,
    pub trial: u64,
    pub method: MethodId,
    pub winners: Vec<Candidate>,
    pub seed: u64,
}

impl SimRecord {
    pub fn winner_count(&self) -> usize {
        self.winners.len()
    }

    fn fields(&self) -> [String; 8] {
        [
            self.model.clone(),
            self.candidates.to_string(),
            self.voters.map(|v| v.to_string()).unwrap_or_default(),
            self.trial.to_string(),
            self.method.name().to_string(),
            self.winners.len().to_string(),
            self.winners.iter().map(|c| c.0.to_string()).collect::<Vec<_>>().join(";"),
            self.seed.to_string(),
        ]
    }
}

/// Writes the schema line, the header and one row per record.
pub fn write_csv<W: Write>(records: &[SimRecord], mut sink: W) -> Result<()> {
    writeln!(sink, "{CSV_SCHEMA}")?;
    let mut w = ::csv::Writer::from_writer(sink);
    w.write_record(CSV_COLUMNS)?;
    for r in records {
        w.write_record(r.fields())?;
    }
    w.flush()?;
    Ok(())
}

/// Reads records written by [`write_csv`], checking the schema line and header.
pub fn read_csv<R: Read>(source: R) -> Result<Vec<SimRecord>> {
    let mut text = String::new();
    let mut source = source;
    source.read_to_string(&mut text)?;
    let (schema, body) = text.split_once('\n').unwrap_or((text.as_str(), ""));
    if schema.trim_end() != CSV_SCHEMA {
        return Err(Error::Parse { line: 1, message: format!("expected schema line '{CSV_SCHEMA}'") });
    }
    let mut reader = ::csv::Reader::from_reader(body.as_bytes());
    let header = reader.headers()?.clone();
    if header.iter().ne(CSV_COLUMNS) {
        return Err(Error::Parse { line: 2, message: format!("expected header '{}'", CSV_COLUMNS.join(",")) });
    }
    let mut out = Vec::new();
    for (i, row) in reader.records().enumerate() {
        let line = i + 3;
        let row = row?;
        let err = |what: &str| Error::Parse { line, message: format!("invalid {what}") };
        let num = |j: usize, what: &str| row[j].parse::<u64>().map_err(|_| err(what));
        let winners: Vec<Candidate> = if row[6].is_empty() {
            Vec::new()
        } else {
            row[6].split(';').map(|s| s.parse().map(Candidate).map_err(|_| err("winners"))).collect::<Result<_>>()?
        };
        if num(5, "winner_count")? as usize != winners.len() || winners.is_empty() {
            return Err(err("winner_count"));
        }
        out.push(SimRecord {
            model: row[0].to_string(),
            candidates: num(1, "candidates")? as usize,
            voters: if row[2].is_empty() { None } else { Some(num(2, "voters")?) },
            trial: num(3, "trial")?,
            method: row[4].parse().map_err(|_| err("method"))?,
            winners,
            seed: num(7, "seed")?,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(trial: u64) -> SimRecord {
        SimRecord {
            model: "ic".into(),
            candidates: 4,
            voters: Some(11),
            trial,
            method: MethodId::SplitCycle,
            winners: vec![Candidate(0), Candidate(3)],
            seed: 7,
        }
    }

    #[test]
    fn layout_and_round_trip() {
        let mut buf = Vec::new();
        write_csv(&[record(0)], &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(
            text,
            format!("{CSV_SCHEMA}\nmodel,candidates,voters,trial,method,winner_count,winners,seed\nic,4,11,0,split_cycle,2,0;3,7\n")
        );
        assert_eq!(read_csv(&buf[..]).unwrap(), vec![record(0)]);
    }

    #[test]
    fn empty_is_header_only() {
        let mut buf = Vec::new();
        write_csv(&[], &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 2);
    }
}
