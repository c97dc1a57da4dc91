//! Small texts: every path, mode and worker count must match the oracle.
#![no_main]

use libfuzzer_sys::{fuzz_target, Corpus};
use repeatscan::{all_positions, build_suffix_structures, oracle, Answers, ExecPolicy, LrAnswerSet, QueryMode, QueryPath, Text};

fuzz_target!(|data: &[u8]| -> Corpus {
    if data.len() > 256 {
        return Corpus::Reject;
    }
    let text = Text::new(data).unwrap();
    let s = build_suffix_structures(&text);
    let truth = oracle::oracle_all_positions(&text);
    let leftmost = Answers::Leftmost(truth.iter().map(LrAnswerSet::leftmost).collect());
    let all = Answers::All(truth);
    for path in [QueryPath::Raw, QueryPath::Compact] {
        for policy in [ExecPolicy::sequential(), ExecPolicy::parallel(3).unwrap()] {
            assert_eq!(all_positions(&s, QueryMode::Leftmost, path, policy), leftmost);
            assert_eq!(all_positions(&s, QueryMode::All, path, policy), all);
        }
    }
    Corpus::Keep
});
