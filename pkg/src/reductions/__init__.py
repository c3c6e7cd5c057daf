"""困難性の帰着構成と、その正しさを小さな例で確かめるための全探索オラクル。"""
