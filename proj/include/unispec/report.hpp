#ifndef UNISPEC_REPORT_HPP
#define UNISPEC_REPORT_HPP

#include <json.hpp>
#include <string>

#include "unispec/rational.hpp"

namespace unispec {

/// Outcome of one exact identity check: both sides and whether they agree.
struct IdentityReport {
  std::string reference;  ///< name of the identity being checked
  Rational lhs;
  Rational rhs;
  bool equal = false;
  nlohmann::ordered_json context = nlohmann::ordered_json::object();

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["reference"] = reference;
    j["lhs"] = lhs.to_string();
    j["rhs"] = rhs.to_string();
    j["equal"] = equal;
    j["context"] = context;
    return j;
  }
};

inline IdentityReport make_report(std::string reference, Rational lhs, Rational rhs,
                                  nlohmann::ordered_json context = nlohmann::ordered_json::object()) {
  IdentityReport r{std::move(reference), std::move(lhs), std::move(rhs), false, std::move(context)};
  r.equal = (r.lhs == r.rhs);
  return r;
}

}  // namespace unispec

#endif  // UNISPEC_REPORT_HPP
