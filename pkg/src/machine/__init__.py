"""有限機械(FA・JFA・GJFA)と機械構成を提供するパッケージ。"""
