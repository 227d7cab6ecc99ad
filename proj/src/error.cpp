#include "fano/error.hpp"

namespace fano {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::truncation: return "truncation";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::model: return "model";
    case Errc::validation: return "validation";
    case Errc::not_terminal: return "not_terminal";
    case Errc::non_isolated: return "non_isolated";
    case Errc::ambiguity: return "ambiguity";
    case Errc::inconsistency: return "inconsistency";
    case Errc::unsupported_index: return "unsupported_index";
    case Errc::missing_target: return "missing_target";
    case Errc::cycle: return "cycle";
    case Errc::parse: return "parse";
    case Errc::unsupported: return "unsupported";
    }
    return "unknown";
}

} // namespace fano
