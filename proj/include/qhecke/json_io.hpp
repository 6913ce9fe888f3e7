#pragma once

#include <string>

#include "qhecke/composition.hpp"
#include "qhecke/filling.hpp"
#include "qhecke/filtration.hpp"
#include "qhecke/hecke.hpp"
#include "qhecke/qsym.hpp"

namespace qhecke {

// JSON shapes: composition [3,1,2]; cell [row,col]; filling
// {"shape":[...],"rows":[[...],...]} with rows bottom-up; qsym
// {"degree":n,"coeffs":{"2.1.3":1}}; module
// {"n":..,"basis":[..],"action":{"i":{"b":"fix"|"kill"|{"move":"b2"}}}}.

std::string composition_to_json(const Composition& a);
Composition composition_from_json(const std::string& text);

std::string filling_to_json(const Filling& t);
Filling filling_from_json(const std::string& text);

std::string qsym_to_json(const QSymElem& x);
QSymElem qsym_from_json(const std::string& text);

std::string module_to_json(const CombModule& m);
CombModule module_from_json(const std::string& text);

std::string filtration_to_json(const FiltrationReport& rep);

std::string insertion_trace_to_json(const InsertionTrace& tr);

}  // namespace qhecke
