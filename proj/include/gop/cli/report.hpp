/*
   Copyright 2026 The gop Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GOP_CLI_REPORT_HPP
#define GOP_CLI_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "gop/catalog.hpp"
#include "gop/growth.hpp"
#include "gop/local.hpp"
#include "gop/pade.hpp"
#include "gop/pcurv.hpp"

namespace gop::cli {

using Json = nlohmann::ordered_json;

/// Fixed 15-significant-digit rendering; "inf" and "-inf" for infinities.
std::string decimal(double x);

Json to_json(const BigRat& q);
Json to_json(const Poly& p);
Json to_json(const RatMat& m);
Json to_json(const LogTerm& t);
Json to_json(const IndicialData& d);
Json to_json(const OperatorProfile& p);
Json to_json(const ExponentSplit& e, const Poly& phi, const Point& pt);
Json to_json(const PCurvatureReport& r);
Json to_json(const GlobalScan& s);
Json to_json(const GalochkinTrace& t);
Json to_json(const SizeEstimate& e);
Json to_json(const SizeRadiusReport& r);
Json to_json(const PadeApproximant& a, const ResidualOrder& r);
Json to_json(const PadeSystem& s);
Json to_json(const CatalogEntry& e);

/// Series file: {"trunc_order": N, "components": [[[num, den], ...], ...]}.
std::vector<TruncatedSeries> series_from_json(const Json& j);

/// Indented key/value rendering of a report for --format text.
std::string render_text(const Json& j);

}  // namespace gop::cli

#endif  // GOP_CLI_REPORT_HPP
