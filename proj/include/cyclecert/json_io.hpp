#ifndef CYCLECERT_JSON_IO_HPP
#define CYCLECERT_JSON_IO_HPP

#include "json.hpp"

#include "cyclecert/decorated.hpp"
#include "cyclecert/graph.hpp"
#include "cyclecert/invariants.hpp"
#include "cyclecert/pipeline.hpp"
#include "cyclecert/spectrum.hpp"
#include "cyclecert/surgery.hpp"

namespace cyclecert {

// nlohmann::json keeps object keys sorted, so every document below is a
// pure function of its value: byte-identical across reruns.
using Json = nlohmann::json;

Json to_json(const Graph& g);
Json to_json(const GraphProfile& p);
Json to_json(const PathWitness& w);
Json to_json(const CycleWitness& w);
Json to_json(const TriangulatedCycle& c);
Json to_json(const SurgeryResult& r);
Json to_json(const SpectrumCertificate& c);
Json to_json(const TrianglePartition& p);
Json to_json(const RangePlan& p);
Json to_json(const PancyclicityResult& r);

} // namespace cyclecert

#endif
