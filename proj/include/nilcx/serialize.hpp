#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "nilcx/cohomology.hpp"
#include "nilcx/deform.hpp"
#include "nilcx/hermitian.hpp"
#include "nilcx/spectral.hpp"

namespace nilcx {
namespace serialize {

using nlohmann::json;

json hodge_json(const cohomology::HodgeTable& t);
json frolicher_json(spectral::SpectralSequence& ss);
json metrics_json(const hermitian::Existence& sg,
                  const hermitian::Existence& balanced);
json sweep_json(const std::vector<deform::SweepRow>& rows);
json semicont_json(const deform::SemicontReport& report);
json witness_json(const hermitian::HermitianParams& p);

std::string hodge_text(const cohomology::HodgeTable& t);
std::string frolicher_text(spectral::SpectralSequence& ss);
std::string sweep_text(const std::vector<deform::SweepRow>& rows);
std::string semicont_text(const deform::SemicontReport& report);

std::string sweep_csv(const std::vector<deform::SweepRow>& rows);
std::string hodge_csv(const cohomology::HodgeTable& t);
std::string frolicher_csv(spectral::SpectralSequence& ss);
std::string semicont_csv(const deform::SemicontReport& report);

std::string witness_text(const hermitian::HermitianParams& p);

}  // namespace serialize
}  // namespace nilcx
