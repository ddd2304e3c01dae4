#![no_main]

use libfuzzer_sys::fuzz_target;
use regsolve::automata::{lasso_to_kripke, parse_lasso};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(w) = parse_lasso(text) {
        let s = lasso_to_kripke(&w);
        assert_eq!(s.len(), w.prefix.len() + w.cycle.len());
    }
});
