// Frozen oracle vectors. Generated by tests/oracle/gen_vectors.py;
// regenerate with: python3 tests/oracle/gen_vectors.py > tests/frozen_vectors.hpp
#pragma once

namespace frozen {

struct MulVector { unsigned long long k; const char* x; const char* y; };
inline const MulVector kMulVectors[] = {
    {1ULL, "6b17d1f2e12c4247f8bce6e563a440f277037d812deb33a0f4a13945d898c296", "4fe342e2fe1a7f9b8ee7eb4a7c0f9e162bce33576b315ececbb6406837bf51f5"},
    {2ULL, "7cf27b188d034f7e8a52380304b51ac3c08969e277f21b35a60b48fc47669978", "07775510db8ed040293d9ac69f7430dbba7dade63ce982299e04b79d227873d1"},
    {3ULL, "5ecbe4d1a6330a44c8f7ef951d4bf165e6c6b721efada985fb41661bc6e7fd6c", "8734640c4998ff7e374b06ce1a64a2ecd82ab036384fb83d9a79b127a27d5032"},
    {5ULL, "51590b7a515140d2d784c85608668fdfef8c82fd1f5be52421554a0dc3d033ed", "e0c17da8904a727d8ae1bf36bf8a79260d012f00d4d80888d1d0bb44fda16da4"},
    {7ULL, "8e533b6fa0bf7b4625bb30667c01fb607ef9f8b8a80fef5b300628703187b2a3", "73eb1dbde03318366d069f83a6f5900053c73633cb041b21c55e1a86c1f400b4"},
    {112233445566778899ULL, "339150844ec15234807fe862a86be77977dbfb3ae3d96f4c22795513aeaab82f", "b1c14ddfdc8ec1b2583f51e85a5eb3a155840f2034730e9b5ada38b674336a21"},
};

inline const char* kOrderMinusOneX = "6b17d1f2e12c4247f8bce6e563a440f277037d812deb33a0f4a13945d898c296";
inline const char* kOrderMinusOneY = "b01cbd1c01e58065711814b583f061e9d431cca994cea1313449bf97c840ae0a";

struct HashVector { const char* parts_hex[4]; int n; const char* digest; };
inline const HashVector kHashVectors[] = {
    {{"", "", "", ""}, 0, "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"},
    {{"", "", "", ""}, 1, "df3f619804a92fdb4057192dc43dd748ea778adc52bc498ce80524c014b81119"},
    {{"6162", "63", "", ""}, 2, "f2939f903016e5bb29b1e4a61cdbd376220ca03a24180b39995f2d50f2e0a647"},
    {{"61", "6263", "", ""}, 2, "b534ce16ac9c8b36823f39a395ce8e0e3c7ad9605b82b5444f18cadacd217a5d"},
    {{"0000000000000000000000000000000000000000000000000000000000000000", "6c6162656c", "0000000000000000", ""}, 3, "cf32dbd6dffdcc448efab5b1daa1a20a2b53572e399c7ce6ec26440580dbf59c"},
};

inline const char* kKeystreamKey = "bcc613c949d29cd4c6adc75f1c5302b7ae8590f6cbaf07b95170b91ea7737559";
inline const char* kKeystreamLabel = "lai";
inline const char* kKeystream48 = "268928ebb0ecc666138788a83c59d494610e22f55a12bc3eb2aa6aeaffa74e53ef70365b8f7ddb17da1dbdbfd8cf0f60";

inline const char* kEcdsaPriv = "cacbaf036cc98bdce8ac9fd8d12f408a16938d2cbb611a4a6f480557d2e73c21";
inline const char* kEcdsaPubX = "c5b370d442b651a6c97f785c3a6478a1464de1d89dc6a4dd2203cf997c6ccc57";
inline const char* kEcdsaPubY = "317e356848bf82f1107864ed692c164d68fa0c60623509f2293b9564904622ea";
inline const char* kEcdsaMsg = "73616d706c65206d65737361676520666f72207369676e696e67";
inline const char* kEcdsaRx = "513a3b7ae1aa8b5d73bfd8f5e3f2fff156ecceafa9551fcbd035052129015e13";
inline const char* kEcdsaRy = "7b5820f585a9e4d18137844f3c397cfa1d3543e253c4308ba4c118494fc4b41b";
inline const char* kEcdsaR = "513a3b7ae1aa8b5d73bfd8f5e3f2fff156ecceafa9551fcbd035052129015e13";
inline const char* kEcdsaS = "78b5b7597ea54ea4f3701433206c752fac612aa35ec2fce59a9fdbf3e71cf3b4";

inline const char* kCredBody = "637265643a310a6973737565723a6469643a6576617574683a303031313232333334343535363637373838393961616262636364646565666630303131323233333434353536363737383839396161626263636464656566660a7375626a6563743a6469643a6576617574683a666665656464636362626161393938383737363635353434333332323131303066666565646463636262616139393838373736363535343433333232313130300a6973737565643a313732333630303030300a617474723a726567697374657265644576557365723d747275650a617474723a746965723d7374616e646172640a";
inline const char* kCredSubjectKey = "03eb9f26b74f7d3f01876a0e23262e735b420448f882a204f803a0e62739e27132";
inline const char* kCredNonce = "a104ed2b048a44d3c553379d1ccba22caf3e0bc4b9aea6e815c961fbc2ed77d0";
inline const char* kCredDigest = "45ff8d33a43c71bff9dba276d8f84b13a1288320f6c631661e3563ee28c0db8b";

inline const char* kA1Pdid = "0f2078ee77868cd5c05019e75d9350c0d2551c183f95f8fd8ca6731b8905d914";
inline const char* kA1Wire = "11000000200f2078ee77868cd5c05019e75d9350c0d2551c183f95f8fd8ca6731b8905d9140000001365762d6368617267696e672d726571756573740000001073746174696f6e2d76632d70726f6f66";

inline const char* kChainRec1 = "7265636f72642d6f6e65";
inline const char* kChainRec2 = "7265636f72642d74776f";
inline const char* kChain1 = "224af3a28097fa2a1309c09b12686c6e2b659217e658d70b89bb1d77f877039e";
inline const char* kChain2 = "e88647e8383034253407ef699c458c811af60b4abb657e51332fbe88fd079387";

} // namespace frozen
