//! Line-oriented serialization of query answers and walk statistics.
//!
//! Leftmost answers: `k<TAB>start<TAB>length`, with `-1<TAB>0` for none.
//! All-ties answers: `k<TAB>s1,l1;s2,l2;...`, with `-1,0` for none.
//! Lines end with LF.

use std::io::{self, Write};

use crate::query::{Answers, LrAnswer, LrAnswerSet, QueryPath};
use crate::stats::WalkStats;

pub fn write_answers<W: Write>(w: &mut W, first: usize, answers: &Answers) -> io::Result<()> {
    match answers {
        Answers::Leftmost(list) => {
            for (j, a) in list.iter().enumerate() {
                write_leftmost(w, first + j, a)?;
            }
        }
        Answers::All(list) => {
            for (j, set) in list.iter().enumerate() {
                write_all(w, first + j, set)?;
            }
        }
    }
    Ok(())
}

pub fn write_leftmost<W: Write>(w: &mut W, k: usize, a: &LrAnswer) -> io::Result<()> {
    writeln!(w, "{k}\t{}\t{}", a.start(), a.length())
}

pub fn write_all<W: Write>(w: &mut W, k: usize, set: &LrAnswerSet) -> io::Result<()> {
    write!(w, "{k}\t")?;
    if set.is_empty() {
        return w.write_all(b"-1,0\n");
    }
    for (j, e) in set.entries().iter().enumerate() {
        if j > 0 {
            w.write_all(b";")?;
        }
        write!(w, "{},{}", e.start(), e.length())?;
    }
    w.write_all(b"\n")
}

pub fn answers_to_bytes(first: usize, answers: &Answers) -> Vec<u8> {
    let mut buf = Vec::new();
    write_answers(&mut buf, first, answers).expect("writing to a Vec cannot fail");
    buf
}

fn path_name(p: QueryPath) -> &'static str {
    match p {
        QueryPath::Raw => "raw",
        QueryPath::Compact => "compact",
    }
}

/// A small table: one row per LLR array type with minimum, maximum and
/// average walk steps.
pub fn write_walk_stats<W: Write>(w: &mut W, rows: &[WalkStats]) -> io::Result<()> {
    writeln!(w, "array\tminimum\tmaximum\taverage")?;
    for s in rows {
        writeln!(
            w,
            "{}\t{}\t{}\t{:.2}",
            path_name(s.path),
            s.min_steps,
            s.max_steps,
            s.avg_steps()
        )?;
    }
    if rows.iter().all(|s| !s.has_repeats()) {
        writeln!(
            w,
            "# no repeats: no position is covered by a repeated substring"
        )?;
    }
    Ok(())
}
