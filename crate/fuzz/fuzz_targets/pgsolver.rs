#![no_main]

use libfuzzer_sys::fuzz_target;
use regsolve::arena::{parse_pgsolver, write_pgsolver};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(game) = parse_pgsolver(text) {
        let again = parse_pgsolver(&write_pgsolver(&game)).expect("writer output parses");
        assert_eq!(again.adjacency(), game.adjacency());
    }
});
