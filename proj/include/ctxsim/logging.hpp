#pragma once

namespace ctxsim {

/// Routes the default logger to stderr with the level named by $CTXSIM_LOG
/// (trace, debug, info, warn, error, critical, off). Defaults to warn.
void configure_logging();

}  // namespace ctxsim
