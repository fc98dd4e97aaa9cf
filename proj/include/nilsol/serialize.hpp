/*
 * Copyright 2026 The nilsol Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <optional>
#include <string>

#include "nilsol/compare.hpp"
#include "nilsol/pipeline.hpp"

namespace nilsol {

enum class Format { Json, Csv, Table };

std::optional<Format> parse_format(const std::string& s);

/// Deterministic: no timings, records in ascending mask order.
std::string render_report(const Report& r, Format f);

/// A single record (JSON object, one CSV row with header, or a text block).
std::string render_record(const ClassificationRecord& r, Format f);

/// Human-readable outcome of verify_certificate.
std::string render_certificate_check(const BracketTable& b, const CertificateCheck& c);

std::string render_derivation(const RationalVector& d);

}  // namespace nilsol
