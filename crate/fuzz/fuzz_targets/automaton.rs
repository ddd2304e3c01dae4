#![no_main]

use libfuzzer_sys::fuzz_target;
use regsolve::automata::{parse_automaton, write_automaton};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(a) = parse_automaton(text) {
        let written = write_automaton(&a);
        let again = parse_automaton(&written).expect("writer output parses");
        assert_eq!(write_automaton(&again), written);
    }
});
