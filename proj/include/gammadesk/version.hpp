#pragma once

#define GAMMADESK_VERSION "0.1.0"

namespace gammadesk {
inline const char* version() { return GAMMADESK_VERSION; }
}
