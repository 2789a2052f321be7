// Known-good exact constants used by the verification ledger.  All tables
// are row-major arrays of rational literals ("p/q").  The m = 3
// protected-node covariance is stored exactly as published: entries in
// kTernarySigmaScaled multiplied by kTernarySigmaScale give the matrix.
#pragma once

namespace polyurn::refdata {

extern const char* const kBinaryA[25];
extern const char* const kBinaryB2[25];
extern const char* const kBinaryB[25];
extern const char* const kBinarySigma[25];
extern const char* const kBinaryV1[5];
extern const char* const kBinaryActivities[5];
extern const char* const kTernaryA[361];
extern const char* const kTernaryV1[19];
extern const char* const kTernaryActivities[19];
extern const char* const kTernaryLeafCounts[19];
extern const char* const kTernaryPI[361];
extern const char* const kTernaryB[361];
extern const char* const kTernarySigmaScaled[361];
extern const char* const kTernarySigmaP[9];
extern const char* const kLeafGapA3[9];
extern const char* const kLeafGapSigma3[9];
extern const char* const kLeafGapV1[3];
extern const char* const kOneProtSigma2[9];
extern const char* const kOneProtSigma3[16];
extern const char* const kTernarySigmaScale;

}  // namespace polyurn::refdata
