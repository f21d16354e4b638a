#pragma once

#include <string>

#include <json.hpp>

#include "commhom/homology.hpp"
#include "commhom/morse.hpp"
#include "commhom/torsion.hpp"
#include "commhom/weyl_series.hpp"

namespace commhom {

enum class OutputFormat { json, csv, dot, text };

OutputFormat parse_format(const std::string& name);

/* Keys keep their insertion order so reports are byte-stable. */
using Json = nlohmann::ordered_json;

/* Big integers render as JSON strings, small counts as numbers. */
Json int_json(const Int& value);

Json facts_json(const LieType& type);
std::string facts_text(const LieType& type);
std::string diagram_dot(const LieType& type);

std::string complex_label(const LieType& type, const SubcomplexSpec& spec);
Json complex_json(const LieType& type, const SubcomplexSpec& spec, const AlcoveComplex& c);
std::string complex_text(const LieType& type, const SubcomplexSpec& spec, const AlcoveComplex& c);
std::string complex_csv(const AlcoveComplex& c);
std::string complex_dot(const LieType& type, const SubcomplexSpec& spec, const AlcoveComplex& c);

/* Degree range, basis labels, then sparse triplets "row col value" per
 * boundary, as documented in docs/formats.md. */
std::string chain_complex_dump(const ChainComplex& cc);

Json homology_json(const std::string& label, const ChainComplex& cc, const HomologySummary& h);
std::string homology_text(const std::string& label, const ChainComplex& cc, const HomologySummary& h);
std::string homology_csv(const HomologySummary& h);

Json report_json(const DetectionReport& report);
std::string report_csv_header();
std::string report_csv_row(const DetectionReport& report);
std::string report_text(const DetectionReport& report);

Json series_json(const LieType& type, int m, const RationalSeries& series);
std::string series_csv(const RationalSeries& series);
std::string series_text(const LieType& type, int m, const RationalSeries& series);

Json certificate_json(const AlcoveComplex& c, const MorseCertificate& cert);

}  // namespace commhom
