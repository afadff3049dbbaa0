//! Cooperative cancellation for long computations.
//!
//! A deadline or flag is installed per thread; the Gröbner engine calls
//! [`checkpoint`] between pair reductions.

use std::cell::RefCell;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::Instant;

use crate::error::{Error, Result};

#[derive(Clone, Default)]
struct Token {
    deadline: Option<Instant>,
    flag: Option<Arc<AtomicBool>>,
}

thread_local! {
    static CURRENT: RefCell<Token> = RefCell::new(Token::default());
}

/// Runs `f` with a deadline; computations past it fail with [`Error::Cancelled`].
pub fn with_deadline<T>(deadline: Instant, f: impl FnOnce() -> T) -> T {
    scoped(
        Token {
            deadline: Some(deadline),
            flag: None,
        },
        f,
    )
}

/// Runs `f` so that setting `flag` cancels it.
pub fn with_flag<T>(flag: Arc<AtomicBool>, f: impl FnOnce() -> T) -> T {
    scoped(
        Token {
            deadline: None,
            flag: Some(flag),
        },
        f,
    )
}

fn scoped<T>(token: Token, f: impl FnOnce() -> T) -> T {
    let prev = CURRENT.with(|c| c.replace(token));
    struct Restore(Option<Token>);
    impl Drop for Restore {
        fn drop(&mut self) {
            if let Some(t) = self.0.take() {
                CURRENT.with(|c| *c.borrow_mut() = t);
            }
        }
    }
    let _restore = Restore(Some(prev));
    f()
}

pub fn checkpoint() -> Result<()> {
    CURRENT.with(|c| {
        let t = c.borrow();
        if let Some(d) = t.deadline {
            if Instant::now() >= d {
                return Err(Error::Cancelled);
            }
        }
        if let Some(f) = &t.flag {
            if f.load(Ordering::Relaxed) {
                return Err(Error::Cancelled);
            }
        }
        Ok(())
    })
}
